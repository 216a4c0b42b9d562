// SPDX-License-Identifier: Apache-2.0
//
// JSON/CSV persistence round-trips for circuits, models, compressed models,
// cost models, repositories, and timeline results.
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <memory>
#include <numbers>
#include <sstream>

#include "qucad/common/errors.hpp"
#include "qucad/repo/cluster.hpp"
#include "qucad/serial.hpp"
#include "toy.hpp"

using namespace qucad;
using namespace qucad::serial;
namespace fs = std::filesystem;

namespace {

fs::path tmp_dir() {
  const fs::path d = fs::temp_directory_path() / "qucad_serial_test";
  fs::create_directories(d);
  return d;
}

qcore::ParamCircuit sample_circuit() {
  qcore::ParamCircuit c;
  c.n_qubits = 3;
  c.coupling = qcore::Coupling::line(3);
  c.gates = {qcore::fixed_gate(qcore::GateKind::RY, 0, 0.75),
             qcore::slot_gate(qcore::GateKind::RZ, 1, 0),
             qcore::slot_gate(qcore::GateKind::CRX, 0, 1, 1),
             qcore::cnot(1, 2),
             qcore::swap(0, 1)};
  c.n_params = 2;
  c.validate();
  return c;
}

bool same_circuit(const qcore::ParamCircuit& a, const qcore::ParamCircuit& b) {
  if (a.n_qubits != b.n_qubits || a.n_params != b.n_params ||
      a.gates.size() != b.gates.size() ||
      !(a.coupling.pairs == b.coupling.pairs))
    return false;
  for (size_t i = 0; i < a.gates.size(); ++i) {
    const auto& ga = a.gates[i];
    const auto& gb = b.gates[i];
    if (ga.kind != gb.kind || ga.q0 != gb.q0 || ga.q1 != gb.q1 ||
        ga.slot != gb.slot || ga.angle != gb.angle)
      return false;
  }
  return true;
}

bool same_model(const qnn::QnnModel& a, const qnn::QnnModel& b) {
  return same_circuit(a.circuit, b.circuit) && a.theta == b.theta &&
         a.readout == b.readout && a.encoding.n_qubits == b.encoding.n_qubits &&
         a.encoding.n_features == b.encoding.n_features &&
         a.encoding.lo == b.encoding.lo && a.encoding.hi == b.encoding.hi;
}

}  // namespace

TEST_CASE("circuit JSON round-trip preserves every gate field") {
  qcore::ParamCircuit c = sample_circuit();
  qcore::ParamCircuit back = circuit_from_json(circuit_to_json(c));
  CHECK(same_circuit(c, back));
}

TEST_CASE("circuit JSON rejects garbage") {
  CHECK_THROWS_AS(circuit_from_json("not json at all"), io_error);
  CHECK_THROWS_AS(circuit_from_json("{}"), io_error);
  CHECK_THROWS_AS(circuit_from_json(R"({"n_qubits": 2})"), io_error);
}

TEST_CASE("model JSON round-trip") {
  qnn::Dataset data = toy::dataset(4);
  qnn::QnnModel m = toy::model(2, 1, 33, data);
  qnn::QnnModel back = model_from_json(model_to_json(m));
  CHECK(same_model(m, back));

  SUBCASE("doubles survive bit-exactly") {
    for (size_t i = 0; i < m.theta.size(); ++i)
      CHECK(back.theta[i] == m.theta[i]);
  }
  SUBCASE("truncated text is an io_error") {
    std::string text = model_to_json(m);
    CHECK_THROWS_AS(model_from_json(text.substr(0, text.size() / 2)),
                    io_error);
  }
}

TEST_CASE("compressed model JSON round-trip") {
  qnn::Dataset data = toy::dataset(4);
  CompressedModel cm;
  cm.model = toy::model(2, 1, 34, data);
  cm.mask.assign(cm.model.theta.size(), 0);
  for (size_t i = 0; i < cm.mask.size(); i += 2) cm.mask[i] = 1;
  cm.table = compress::CompressionTable::quarter_turns();
  cm.snapshot_id = "day-017";

  CompressedModel back = compressed_from_json(compressed_to_json(cm));
  CHECK(same_model(cm.model, back.model));
  CHECK(back.mask == cm.mask);
  CHECK(back.table.levels == cm.table.levels);
  CHECK(back.snapshot_id == "day-017");
}

TEST_CASE("cost model JSON round-trip keeps overrides") {
  compress::GateCostModel cm = compress::GateCostModel::standard();
  cm.add_override(qcore::GateKind::RX, 1.5, {4, 2});
  compress::GateCostModel back = cost_model_from_json(cost_model_to_json(cm));

  for (qcore::GateKind k :
       {qcore::GateKind::RX, qcore::GateKind::RY, qcore::GateKind::RZ,
        qcore::GateKind::CRX, qcore::GateKind::CRY, qcore::GateKind::CRZ,
        qcore::GateKind::CNOT, qcore::GateKind::SWAP})
    CHECK(back.generic(k) == cm.generic(k));
  CHECK(back.overrides().size() == cm.overrides().size());
  CHECK(back.cost_of(qcore::GateKind::RX, 1.5) == compress::GateCost{4, 2});
  CHECK(back.cost_of(qcore::GateKind::CRY, std::numbers::pi) ==
        compress::GateCost{2, 1});
  CHECK(back.cost_of(qcore::GateKind::RY, 0.0) == compress::GateCost{0, 0});
}

TEST_CASE("repository save/load round-trip") {
  qnn::Dataset data = toy::dataset(4);
  qnn::QnnModel base = toy::model(2, 1, 35, data);

  auto snap_a = toy::snapshot(2, 0.004, 0.02, 0.02, "snap-a");
  auto snap_b = toy::snapshot(2, 0.004, 0.12, 0.02, "snap-b");
  auto schema = std::make_shared<calib::CalibrationSchema>(
      calib::CalibrationSchema::from_snapshot(snap_a));

  repo::Repository r;
  r.schema = schema;
  r.weights.assign(schema->dim(), 0.0);
  r.weights[2] = 1.0;
  r.th_w = 0.0625;
  r.acc_requirement = 0.55;

  repo::RepoEntry a;
  a.centroid = calib::vectorize(snap_a, schema);
  a.snapshot = snap_a;
  a.model = base;
  a.mask.assign(base.theta.size(), 1);
  a.mean_acc = 0.91;
  a.mean_dist = 0.01;
  a.invalid = false;
  a.source = repo::RepoEntry::Source::Offline;
  a.id = "offline-0";
  r.entries.push_back(a);

  repo::RepoEntry b = a;
  b.centroid = calib::vectorize(snap_b, schema);
  b.snapshot = snap_b;
  b.mean_acc = 0.31;
  b.mean_dist = 0.0;
  b.invalid = true;
  b.source = repo::RepoEntry::Source::Online;
  b.id = "online-snap-b";
  r.entries.push_back(b);

  const fs::path dir = tmp_dir();
  const fs::path path = dir / "repo.json";
  save_repository(path.string(), r);
  CHECK(fs::exists(dir / "repo.offline-0.model.json"));
  CHECK(fs::exists(dir / "repo.online-snap-b.model.json"));

  repo::Repository back = load_repository(path.string());
  CHECK(back.weights == r.weights);
  CHECK(back.th_w == r.th_w);
  CHECK(back.acc_requirement == r.acc_requirement);
  REQUIRE(back.schema != nullptr);
  CHECK(*back.schema == *schema);
  REQUIRE(back.entries.size() == 2);
  for (size_t i = 0; i < 2; ++i) {
    CHECK(back.entries[i].centroid.values == r.entries[i].centroid.values);
    CHECK(back.entries[i].snapshot.date == r.entries[i].snapshot.date);
    CHECK(back.entries[i].snapshot.tq_error == r.entries[i].snapshot.tq_error);
    CHECK(same_model(back.entries[i].model, r.entries[i].model));
    CHECK(back.entries[i].mask == r.entries[i].mask);
    CHECK(back.entries[i].mean_acc == r.entries[i].mean_acc);
    CHECK(back.entries[i].mean_dist == r.entries[i].mean_dist);
    CHECK(back.entries[i].invalid == r.entries[i].invalid);
    CHECK(back.entries[i].source == r.entries[i].source);
    CHECK(back.entries[i].id == r.entries[i].id);
  }
  // Loaded centroids share one schema instance and pass the identity check.
  CHECK_NOTHROW(repo::weighted_distance(back.entries[0].centroid,
                                        back.entries[1].centroid,
                                        back.weights));
  fs::remove_all(dir);
}

TEST_CASE("load_repository propagates io errors") {
  CHECK_THROWS_AS(load_repository("/nonexistent/repo.json"), io_error);
  const fs::path dir = tmp_dir();
  const fs::path bad = dir / "bad.json";
  std::ofstream(bad) << "{\"weights\": [1,2,";
  CHECK_THROWS_AS(load_repository(bad.string()), io_error);
  fs::remove_all(dir);
}

TEST_CASE("timeline JSON round-trip") {
  harness::TimelineResult r;
  r.strategy = harness::Strategy::QuCAD;
  r.total_optimizations = 3;
  r.total_wall_seconds = 12.5;
  r.offline_wall_seconds = 40.25;
  for (int i = 0; i < 3; ++i) {
    harness::DayRecord d;
    d.date = "day-" + std::to_string(i);
    d.accuracy = 0.8 + 0.01 * i;
    d.decision = i == 0 ? "compress-new" : "reuse";
    d.optimizations = i == 0 ? 1 : 0;
    d.wall_seconds = 0.5 * i;
    r.days.push_back(d);
  }
  harness::TimelineResult back = timeline_from_json(timeline_to_json(r));
  CHECK(back.strategy == r.strategy);
  CHECK(back.total_optimizations == 3);
  CHECK(back.total_wall_seconds == 12.5);
  CHECK(back.offline_wall_seconds == 40.25);
  REQUIRE(back.days.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    CHECK(back.days[i].date == r.days[i].date);
    CHECK(back.days[i].accuracy == r.days[i].accuracy);
    CHECK(back.days[i].decision == r.days[i].decision);
    CHECK(back.days[i].optimizations == r.days[i].optimizations);
    CHECK(back.days[i].wall_seconds == r.days[i].wall_seconds);
  }
  CHECK_THROWS_AS(timeline_from_json("[]"), io_error);
}

TEST_CASE("summary CSV shape") {
  harness::SummaryRow a;
  a.strategy = "QuCAD";
  a.mean_acc = 0.9;
  a.variance = 0.001;
  a.days_over = {50, 55};
  a.delta_mean = 0.2;
  a.delta_days_over = {10, 12};
  a.total_optimizations = 4;
  a.total_wall_seconds = 33.0;

  const fs::path dir = tmp_dir();
  const fs::path path = dir / "summary.csv";
  write_summary_csv(path.string(), {a}, {0.8, 0.7});

  std::ifstream in(path);
  REQUIRE(in.good());
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(header ==
        "strategy,mean_acc,vs_baseline,variance,days_over_0.8,"
        "delta_days_over_0.8,days_over_0.7,delta_days_over_0.7,"
        "total_optimizations,wall_seconds");
  CHECK(row.substr(0, 6) == "QuCAD,");
  // One comma-separated field per header column.
  const auto count_fields = [](const std::string& s) {
    return std::count(s.begin(), s.end(), ',') + 1;
  };
  CHECK(count_fields(row) == count_fields(header));
  fs::remove_all(dir);
}

TEST_CASE("text file helpers") {
  const fs::path dir = tmp_dir();
  const fs::path p = dir / "note.txt";
  write_text_file(p.string(), "alpha\nbeta\n");
  CHECK(read_text_file(p.string()) == "alpha\nbeta\n");
  CHECK_THROWS_AS(read_text_file("/nonexistent/none.txt"), io_error);
  fs::remove_all(dir);
}
