// SPDX-License-Identifier: Apache-2.0
//
// Calibration snapshots: validation, the fixed vector layout, file and text
// round-trips, noise-model construction, and the synthetic drift generator.
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <memory>
#include <string>

#include "qucad/calib/calibration.hpp"
#include "qucad/calib/drift.hpp"
#include "qucad/common/errors.hpp"
#include "toy.hpp"

using namespace qucad;
using namespace qucad::calib;
namespace fs = std::filesystem;

namespace {

fs::path tmp_file(const std::string& name) {
  return fs::temp_directory_path() / ("qucad_calib_test_" + name);
}

// 2 qubits, every field value distinct so ordering mistakes show up.
CalibrationSnapshot distinct_snapshot() {
  CalibrationSnapshot s;
  s.date = "2024-03-01";
  s.n_qubits = 2;
  s.sq_error = {0.01, 0.02};
  s.tq_error[qcore::make_pair_sorted(0, 1)] = 0.03;
  s.ro_error = {{{0.04, 0.05}}, {{0.06, 0.07}}};
  s.validate();
  return s;
}

bool same_snapshot(const CalibrationSnapshot& a, const CalibrationSnapshot& b) {
  return a.date == b.date && a.n_qubits == b.n_qubits &&
         a.sq_error == b.sq_error && a.tq_error == b.tq_error &&
         a.ro_error == b.ro_error;
}

}  // namespace

TEST_CASE("snapshot validation and pair lookup") {
  CalibrationSnapshot s = distinct_snapshot();
  CHECK(s.pair_error(0, 1) == 0.03);
  CHECK(s.pair_error(1, 0) == 0.03);  // order-insensitive
  CHECK_THROWS_AS(s.pair_error(0, 0), std::invalid_argument);

  SUBCASE("field lengths must match the qubit count") {
    s.sq_error.push_back(0.1);
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  }
  SUBCASE("rates outside [0,1] are rejected") {
    s.tq_error[qcore::make_pair_sorted(0, 1)] = 1.5;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  }
  SUBCASE("pairs must reference existing qubits") {
    s.tq_error[qcore::make_pair_sorted(0, 5)] = 0.1;
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
  }
}

TEST_CASE("vectorize lays out 1q, pair, then readout columns") {
  CalibrationSnapshot s = distinct_snapshot();
  auto schema =
      std::make_shared<CalibrationSchema>(CalibrationSchema::from_snapshot(s));
  CHECK(schema->dim() == 7);
  CHECK(schema->labels() ==
        std::vector<std::string>{"sq0", "sq1", "tq0-1", "ro0_p10", "ro1_p10",
                                 "ro0_p01", "ro1_p01"});

  CalibrationVector v = vectorize(s, schema);
  CHECK(v.values ==
        std::vector<double>{0.01, 0.02, 0.03, 0.04, 0.06, 0.05, 0.07});

  SUBCASE("schema comparison is structural") {
    CalibrationVector w = vectorize(s, std::make_shared<CalibrationSchema>(
                                           CalibrationSchema::from_snapshot(s)));
    CHECK_NOTHROW(require_same_schema(v, w));
  }
  SUBCASE("mismatched schemas are rejected") {
    auto other = std::make_shared<CalibrationSchema>(*schema);
    other->pairs.clear();
    CalibrationVector w{{0.01, 0.02, 0.04, 0.06, 0.05, 0.07}, other};
    CHECK_THROWS_AS(require_same_schema(v, w), std::invalid_argument);
  }
  SUBCASE("a snapshot missing a schema pair cannot vectorize") {
    CalibrationSnapshot bare = s;
    bare.tq_error.clear();
    CHECK_THROWS_AS(vectorize(bare, schema), std::invalid_argument);
  }
}

TEST_CASE("build_noise_model copies rates and readout flips verbatim") {
  CalibrationSnapshot s = distinct_snapshot();
  qcore::NoiseModel nm = build_noise_model(s);
  CHECK(nm.n_qubits == 2);
  CHECK(nm.p1 == s.sq_error);
  CHECK(nm.p2 == s.tq_error);
  REQUIRE(nm.readout.size() == 2);
  for (int q = 0; q < 2; ++q) {
    CHECK(nm.readout[static_cast<size_t>(q)].p(1, 0) ==
          doctest::Approx(s.ro_error[static_cast<size_t>(q)][0]));
    CHECK(nm.readout[static_cast<size_t>(q)].p(0, 1) ==
          doctest::Approx(s.ro_error[static_cast<size_t>(q)][1]));
  }
}

TEST_CASE("calibration file round-trip, slices, and errors") {
  DriftConfig cfg;
  cfg.n_days = 5;
  cfg.n_qubits = 3;
  cfg.seed = 42;
  std::vector<CalibrationSnapshot> days = synth_timeseries(cfg);
  const fs::path path = tmp_file("roundtrip.json");
  write_calibrations(path.string(), days);

  SUBCASE("whole file") {
    std::vector<CalibrationSnapshot> back = parse_calibrations(path.string());
    REQUIRE(back.size() == days.size());
    for (size_t i = 0; i < days.size(); ++i)
      CHECK(same_snapshot(days[i], back[i]));
  }
  SUBCASE("half-open day slice") {
    std::vector<CalibrationSnapshot> mid =
        parse_calibrations(path.string() + ":1:3");
    REQUIRE(mid.size() == 2);
    CHECK(same_snapshot(mid[0], days[1]));
    CHECK(same_snapshot(mid[1], days[2]));
    CHECK(parse_calibrations(path.string() + ":0:0").empty());
    CHECK(parse_calibrations(path.string() + ":2:5").size() == 3);
  }
  SUBCASE("slice out of range") {
    CHECK_THROWS_AS(parse_calibrations(path.string() + ":2:9"), io_error);
    CHECK_THROWS_AS(parse_calibrations(path.string() + ":4:2"), io_error);
  }
  SUBCASE("missing or malformed file") {
    CHECK_THROWS_AS(parse_calibrations("/nonexistent/nowhere.json"), io_error);
    const fs::path bad = tmp_file("garbage.json");
    std::ofstream(bad) << "{ not json";
    CHECK_THROWS_AS(parse_calibrations(bad.string()), io_error);
    fs::remove(bad);
  }
  fs::remove(path);
}

TEST_CASE("single-day JSON text round-trip") {
  CalibrationSnapshot s = distinct_snapshot();
  CalibrationSnapshot back = snapshot_from_json_text(snapshot_to_json_text(s));
  CHECK(same_snapshot(s, back));
  CHECK_THROWS_AS(snapshot_from_json_text("[1,2"), io_error);
}

TEST_CASE("calibration CSV has a labeled header and one row per day") {
  DriftConfig cfg;
  cfg.n_days = 4;
  cfg.n_qubits = 2;
  std::vector<CalibrationSnapshot> days = synth_timeseries(cfg);
  const fs::path path = tmp_file("series.csv");
  write_calibrations_csv(path.string(), days);

  std::ifstream in(path);
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);
  CHECK(line == "date,sq0,sq1,tq0-1,ro0_p10,ro1_p10,ro0_p01,ro1_p01");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 4);
  fs::remove(path);
}

TEST_CASE("drift generator is deterministic in its seed") {
  DriftConfig cfg;
  cfg.n_days = 20;
  cfg.seed = 777;
  std::vector<CalibrationSnapshot> a = synth_timeseries(cfg);
  std::vector<CalibrationSnapshot> b = synth_timeseries(cfg);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(same_snapshot(a[i], b[i]));

  cfg.seed = 778;
  std::vector<CalibrationSnapshot> c = synth_timeseries(cfg);
  bool any_different = false;
  for (size_t i = 0; i < a.size(); ++i)
    any_different = any_different || !same_snapshot(a[i], c[i]);
  CHECK(any_different);
}

TEST_CASE("drift dates are zero-padded with the configured prefix") {
  DriftConfig cfg;
  cfg.n_days = 3;
  cfg.date_prefix = "cal-";
  std::vector<CalibrationSnapshot> days = synth_timeseries(cfg);
  CHECK(days[0].date == "cal-000");
  CHECK(days[1].date == "cal-001");
  CHECK(days[2].date == "cal-002");
}

TEST_CASE("drifted rates stay inside the clip window") {
  DriftConfig cfg;
  cfg.n_days = 60;
  cfg.walk_sq = 0.05;  // violent walks to slam both bounds
  cfg.walk_tq = 0.3;
  cfg.walk_ro = 0.3;
  cfg.spike_prob = 0.5;
  cfg.spike_tq = cfg.spike_sq = cfg.spike_ro = true;
  cfg.seed = 9;
  bool hit_low = false, hit_high = false;
  for (const CalibrationSnapshot& d : synth_timeseries(cfg)) {
    auto scan = [&](double r) {
      CHECK(r >= 1e-5);
      CHECK(r <= 0.5);
      hit_low = hit_low || r == 1e-5;
      hit_high = hit_high || r == 0.5;
    };
    for (double r : d.sq_error) scan(r);
    for (const auto& [pr, r] : d.tq_error) scan(r);
    for (const auto& r : d.ro_error) {
      scan(r[0]);
      scan(r[1]);
    }
  }
  CHECK(hit_low);  // the walks are strong enough that clipping engaged
  CHECK(hit_high);
}

TEST_CASE("spikes land only on the pinned pair when one is set") {
  DriftConfig cfg;
  cfg.n_days = 50;
  cfg.n_qubits = 4;
  cfg.walk_sq = cfg.walk_tq = cfg.walk_ro = 0.0;
  cfg.spike_prob = 0.5;
  cfg.spike_min = 0.05;
  cfg.spike_max = 0.2;
  cfg.pinned_pair = 1;
  cfg.seed = 11;

  std::vector<CalibrationSnapshot> days = synth_timeseries(cfg);
  const auto schema = CalibrationSchema::from_snapshot(days.front());
  REQUIRE(schema.pairs.size() == 4);  // 4-qubit ring
  const qcore::QubitPair pinned = schema.pairs[1];

  double pinned_max = 0.0;
  for (const CalibrationSnapshot& d : days) {
    for (const auto& [pr, r] : d.tq_error) {
      if (pr == pinned)
        pinned_max = std::max(pinned_max, r);
      else
        CHECK(r == cfg.base_tq);  // untouched: no walk, no spike
    }
    for (double r : d.sq_error) CHECK(r == cfg.base_sq);
  }
  CHECK(pinned_max >= cfg.base_tq + cfg.spike_min);

  SUBCASE("out-of-range pin is rejected") {
    cfg.pinned_pair = 4;
    CHECK_THROWS_AS(synth_timeseries(cfg), std::invalid_argument);
  }
}
