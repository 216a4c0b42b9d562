// SPDX-License-Identifier: Apache-2.0
//
// Priority masks, the Z projection, threshold policies, and the alternating
// compression loop.
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "qucad/common/angles.hpp"
#include "qucad/compress/admm.hpp"
#include "toy.hpp"

using namespace qucad;
using namespace qucad::compress;

TEST_CASE("make_mask splits strictly at the threshold") {
  CHECK(make_mask({5.0, 0.2}, 1.0) == std::vector<std::uint8_t>{1, 0});
  CHECK(make_mask({0.1, 0.7}, 0.0) == std::vector<std::uint8_t>{1, 1});
  CHECK(make_mask({1.0, 2.0}, 2.0) == std::vector<std::uint8_t>{0, 1});
}

TEST_CASE("raising the threshold never flips a bit from 0 to 1") {
  std::mt19937_64 rng(81);
  std::uniform_real_distribution<double> d(0, 10);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<double> p(8);
    for (double& x : p) x = d(rng);
    double t1 = d(rng), t2 = d(rng);
    if (t1 > t2) std::swap(t1, t2);
    auto lo = make_mask(p, t1), hi = make_mask(p, t2);
    for (size_t i = 0; i < p.size(); ++i)
      if (hi[i]) CHECK(lo[i]);  // masked at the higher cutoff => at the lower
  }
}

TEST_CASE("percentile threshold policy") {
  ThresholdPolicy pol;
  pol.kind = ThresholdPolicy::Kind::MaskedFraction;
  pol.value = 0.5;
  SUBCASE("worked example: half of (1,2,3,4)") {
    const double t = resolve_threshold({1, 2, 3, 4}, pol);
    CHECK(t > 2.0);
    CHECK(t < 3.0);
    CHECK(make_mask({1, 2, 3, 4}, t) == std::vector<std::uint8_t>{0, 0, 1, 1});
  }
  SUBCASE("fraction 0 releases every finite priority") {
    pol.value = 0.0;
    const double t = resolve_threshold({1.0, 4.0, 2.5}, pol);
    CHECK(make_mask({1.0, 4.0, 2.5}, t) ==
          std::vector<std::uint8_t>{0, 0, 0});
  }
  SUBCASE("parameters already sitting on a level stay masked at fraction 0") {
    // Their priority is the infinite sentinel; no finite cutoff releases
    // them, and freezing them costs nothing.
    pol.value = 0.0;
    const std::vector<double> p{1.0, std::numeric_limits<double>::infinity()};
    CHECK(make_mask(p, resolve_threshold(p, pol)) ==
          std::vector<std::uint8_t>{0, 1});
  }
  SUBCASE("fraction 1 masks everything") {
    pol.value = 1.0;
    const double t = resolve_threshold({1, 2, 3, 4}, pol);
    CHECK(make_mask({1, 2, 3, 4}, t) ==
          std::vector<std::uint8_t>{1, 1, 1, 1});
  }
  SUBCASE("masked count hits the requested rank on distinct priorities") {
    std::mt19937_64 rng(82);
    std::uniform_real_distribution<double> d(0, 1);
    for (int rep = 0; rep < 50; ++rep) {
      std::vector<double> p(10);
      for (double& x : p) x = d(rng);
      pol.value = 0.3;
      auto m = make_mask(p, resolve_threshold(p, pol));
      int count = 0;
      for (auto b : m) count += b;
      CHECK(count == 3);
    }
  }
}

TEST_CASE("project_Z matches the brute-force grid minimizer") {
  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> ang(0, two_pi);
  std::uniform_real_distribution<double> pert(-1, 1);
  std::bernoulli_distribution coin(0.5);
  CompressionTable table = CompressionTable::quarter_turns();
  const int grid_n = 10000;

  for (int rep = 0; rep < 40; ++rep) {
    const size_t n = 6;
    std::vector<double> theta_u(n), t_admm(n);
    std::vector<std::uint8_t> mask(n);
    for (size_t i = 0; i < n; ++i) {
      theta_u[i] = ang(rng) + pert(rng);
      t_admm[i] = table.levels[nearest_level(theta_u[i], table)];
      mask[i] = coin(rng);
    }
    std::vector<double> z = project_Z(theta_u, mask, t_admm);
    for (size_t i = 0; i < n; ++i) {
      if (mask[i]) {
        // Constrained case: the only feasible point is the level itself.
        CHECK(z[i] == t_admm[i]);
      } else {
        // Unconstrained case: scan the quadratic over a grid around the
        // target; the projection must be at least as good as every grid
        // point and sit within one grid step of the best.
        const double lo = theta_u[i] - 4, hi = theta_u[i] + 4;
        const double step = (hi - lo) / grid_n;
        double best = lo;
        double best_v = (lo - theta_u[i]) * (lo - theta_u[i]);
        for (int k = 1; k <= grid_n; ++k) {
          const double x = lo + k * step;
          const double v = (x - theta_u[i]) * (x - theta_u[i]);
          if (v < best_v) {
            best_v = v;
            best = x;
          }
        }
        CHECK(std::abs(z[i] - best) <= step + 1e-12);
        const double vz = (z[i] - theta_u[i]) * (z[i] - theta_u[i]);
        CHECK(vz <= best_v + 1e-12);
      }
    }
  }
}

TEST_CASE("priority tables") {
  // Circuit: RY(slot0) on q0, CRY(slot1) on (q0, q1).
  qcore::ParamCircuit c;
  c.n_qubits = 2;
  c.gates = {qcore::slot_gate(qcore::GateKind::RY, 0, 0),
             qcore::slot_gate(qcore::GateKind::CRY, 0, 1, 1)};
  c.n_params = 2;
  calib::CalibrationSnapshot snap = toy::snapshot(2, 0.01, 0.05, 0.0);

  SUBCASE("noise-aware: error rate over distance") {
    std::vector<double> dist{0.2, 0.1};
    std::vector<double> p = priority_table(c, dist, snap);
    CHECK(p[0] == doctest::Approx(0.01 / 0.2));
    CHECK(p[1] == doctest::Approx(0.05 / 0.1));
  }
  SUBCASE("zero distance becomes an infinite priority") {
    std::vector<double> dist{0.0, 1e-13};
    std::vector<double> p = priority_table(c, dist, snap);
    CHECK(std::isinf(p[0]));
    CHECK(std::isinf(p[1]));
  }
  SUBCASE("noise-agnostic drops the error factor") {
    std::vector<double> dist{0.2, 0.1};
    std::vector<double> p = priority_table_agnostic(dist);
    CHECK(p[0] == doctest::Approx(5.0));
    CHECK(p[1] == doctest::Approx(10.0));
  }
}

TEST_CASE("compressed_cost prices parameterized gates by their angle") {
  qcore::ParamCircuit c;
  c.n_qubits = 2;
  c.gates = {qcore::slot_gate(qcore::GateKind::CRY, 0, 1, 0),
             qcore::slot_gate(qcore::GateKind::RY, 0, 1),
             qcore::cnot(0, 1)};
  c.n_params = 2;
  CompressionTable table = CompressionTable::quarter_turns();
  GateCostModel cost = GateCostModel::standard();
  std::vector<std::uint8_t> mask{1, 1};

  // CRY at pi: (2,1); RY at 0: removed; CNOT generic (0,1).
  GateCost at_levels = compressed_cost(c, {std::numbers::pi, 0.0}, mask,
                                       table, cost);
  CHECK(at_levels == GateCost{2, 2});

  // Generic angles: (2,2) + (1,0) + (0,1).
  GateCost generic = compressed_cost(c, {1.0, 1.0}, mask, table, cost);
  CHECK(generic == GateCost{3, 3});
}

TEST_CASE("alternating compression: invariants of the result") {
  qnn::Dataset data = toy::dataset(12);
  qnn::QnnModel model = toy::model(2, 1, 7, data);
  calib::CalibrationSnapshot snap = toy::snapshot(2);

  CompressConfig cfg;
  cfg.rounds = 2;
  cfg.inner_epochs = 2;
  cfg.finetune_epochs = 1;
  cfg.inner.batch_size = 6;
  cfg.inner.seed = 3;
  cfg.threshold.value = 0.5;

  CompressResult res = admm_compress(model, data, snap, cfg);
  REQUIRE(res.mask.size() == model.theta.size());

  int masked = 0;
  for (size_t i = 0; i < res.mask.size(); ++i) {
    if (res.mask[i]) {
      ++masked;
      // Frozen parameters sit exactly on a table level.
      const size_t lvl = nearest_level(res.model.theta[i], cfg.table);
      CHECK(res.model.theta[i] == cfg.table.levels[lvl]);
    } else {
      CHECK(std::isfinite(res.model.theta[i]));
    }
  }
  const int expected =
      static_cast<int>(std::llround(0.5 * static_cast<double>(res.mask.size())));
  CHECK(masked == expected);

  SUBCASE("deterministic given the seed") {
    CompressResult again = admm_compress(model, data, snap, cfg);
    CHECK(again.model.theta == res.model.theta);
    CHECK(again.mask == res.mask);
  }
}

TEST_CASE("absolute threshold above every priority leaves all parameters free") {
  qnn::Dataset data = toy::dataset(10);
  qnn::QnnModel model = toy::model(2, 1, 9, data);
  calib::CalibrationSnapshot snap = toy::snapshot(2);

  CompressConfig cfg;
  cfg.rounds = 2;
  cfg.inner_epochs = 1;
  cfg.finetune_epochs = 2;
  cfg.inner.seed = 11;
  cfg.inner.lr = 0.0;  // all updates become no-ops
  cfg.threshold.kind = ThresholdPolicy::Kind::Absolute;
  cfg.threshold.value = 1e12;

  CompressResult res = admm_compress(model, data, snap, cfg);
  for (auto b : res.mask) CHECK(b == 0);
  // Nothing frozen and nothing learned: the pipeline is the identity.
  CHECK(res.model.theta == model.theta);
}

TEST_CASE("fine-tuning never touches frozen parameters") {
  qnn::Dataset data = toy::dataset(10);
  qnn::QnnModel model = toy::model(2, 1, 13, data);
  qcore::NoiseModel noise = calib::build_noise_model(toy::snapshot(2));

  std::vector<std::uint8_t> mask(model.theta.size(), 0);
  for (size_t i = 0; i < mask.size(); i += 2) mask[i] = 1;
  qnn::TrainConfig inner;
  inner.seed = 17;
  inner.batch_size = 5;
  qnn::QnnModel tuned = finetune(model, mask, data, noise, 2, inner);
  bool any_moved = false;
  for (size_t i = 0; i < mask.size(); ++i) {
    if (mask[i])
      CHECK(tuned.theta[i] == model.theta[i]);  // bit-identical
    else
      any_moved = any_moved || tuned.theta[i] != model.theta[i];
  }
  CHECK(any_moved);

  SUBCASE("the all-frozen mask is a no-op") {
    std::vector<std::uint8_t> all(model.theta.size(), 1);
    qnn::QnnModel same = finetune(model, all, data, noise, 3, inner);
    CHECK(same.theta == model.theta);
  }
}
