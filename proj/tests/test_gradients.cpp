// SPDX-License-Identifier: Apache-2.0
//
// Parameter-shift gradients: the cached-sweep fast path against the
// re-simulating reference, finite differences, and the freeze contract.
#include <doctest.h>

#include "oracle.hpp"
#include "qucad/qcore/shift_grad.hpp"

using namespace qucad::qcore;
using qucad::compress::GateCostModel;

namespace {

std::vector<double> random_weights(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> d(-1, 1);
  std::vector<double> w(static_cast<size_t>(n));
  for (double& x : w) x = d(rng);
  return w;
}

double scalar_pure(const ParamCircuit& c, std::span<const double> theta,
                   const std::vector<double>& w) {
  StateVector s = simulate_noiseless(c, theta);
  std::vector<double> z = z_expectations(s);
  double r = 0;
  for (size_t q = 0; q < z.size(); ++q) r += w[q] * z[q];
  return r;
}

double scalar_noisy(const ParamCircuit& c, std::span<const double> theta,
                    const NoiseModel& nm, const GateCostModel& cost,
                    const std::vector<double>& w) {
  DensityMatrix rho = simulate_noisy(c, theta, nm, cost);
  std::vector<double> z = measure_z_expectations(rho, nm);
  double r = 0;
  for (size_t q = 0; q < z.size(); ++q) r += w[q] * z[q];
  return r;
}

}  // namespace

TEST_CASE("fast sweep equals the re-simulating reference, pure and noisy") {
  std::mt19937_64 rng(61);
  for (int rep = 0; rep < 12; ++rep) {
    const int n = 3;
    ParamCircuit c = oracle::random_circuit(n, 10, rng);
    if (c.n_params == 0) continue;
    std::vector<double> theta = oracle::random_theta(c.n_params, rng);
    std::vector<double> w = random_weights(n, rng);
    NoiseModel nm = oracle::random_noise(n, rng, 0.1);
    GateCostModel cost = GateCostModel::standard();

    std::vector<double> fast = shift_gradient_pure(c, theta, w);
    std::vector<double> slow = shift_gradient_pure_direct(c, theta, w);
    REQUIRE(fast.size() == slow.size());
    for (size_t i = 0; i < fast.size(); ++i)
      CHECK(fast[i] == doctest::Approx(slow[i]).epsilon(1e-12));

    std::vector<double> nfast = shift_gradient_noisy(c, theta, nm, cost, w);
    std::vector<double> nslow =
        shift_gradient_noisy_direct(c, theta, nm, cost, w);
    for (size_t i = 0; i < nfast.size(); ++i)
      CHECK(nfast[i] == doctest::Approx(nslow[i]).epsilon(1e-12));
  }
}

TEST_CASE("parameter-shift matches central finite differences") {
  std::mt19937_64 rng(62);
  const double h = 1e-4;
  for (int rep = 0; rep < 8; ++rep) {
    const int n = 3;
    ParamCircuit c = oracle::random_circuit(n, 8, rng);
    if (c.n_params == 0) continue;
    std::vector<double> theta = oracle::random_theta(c.n_params, rng);
    std::vector<double> w = random_weights(n, rng);

    std::vector<double> grad = shift_gradient_pure(c, theta, w);
    for (int i = 0; i < c.n_params; ++i) {
      std::vector<double> tp = theta, tm = theta;
      tp[static_cast<size_t>(i)] += h;
      tm[static_cast<size_t>(i)] -= h;
      const double fd = (scalar_pure(c, tp, w) - scalar_pure(c, tm, w)) / (2 * h);
      CHECK(std::abs(grad[static_cast<size_t>(i)] - fd) < 1e-5);
    }
  }
}

TEST_CASE("noisy parameter-shift matches finite differences at generic angles") {
  // Channel strengths are piecewise constant in the angle (cost-model
  // overrides), so away from the special angles the finite difference sees
  // the same channels as the shift rule.
  std::mt19937_64 rng(63);
  const double h = 1e-4;
  for (int rep = 0; rep < 4; ++rep) {
    const int n = 2;
    ParamCircuit c = oracle::random_circuit(n, 6, rng);
    if (c.n_params == 0) continue;
    std::vector<double> theta = oracle::random_theta(c.n_params, rng);
    std::vector<double> w = random_weights(n, rng);
    NoiseModel nm = oracle::random_noise(n, rng, 0.1);
    GateCostModel cost = GateCostModel::standard();

    std::vector<double> grad = shift_gradient_noisy(c, theta, nm, cost, w);
    for (int i = 0; i < c.n_params; ++i) {
      std::vector<double> tp = theta, tm = theta;
      tp[static_cast<size_t>(i)] += h;
      tm[static_cast<size_t>(i)] -= h;
      const double fd = (scalar_noisy(c, tp, nm, cost, w) -
                         scalar_noisy(c, tm, nm, cost, w)) /
                        (2 * h);
      CHECK(std::abs(grad[static_cast<size_t>(i)] - fd) < 1e-5);
    }
  }
}

TEST_CASE("frozen slots report exactly zero") {
  std::mt19937_64 rng(64);
  ParamCircuit c = oracle::random_circuit(3, 10, rng);
  while (c.n_params < 2) c = oracle::random_circuit(3, 10, rng);
  std::vector<double> theta = oracle::random_theta(c.n_params, rng);
  std::vector<double> w = random_weights(3, rng);
  std::vector<std::uint8_t> active(static_cast<size_t>(c.n_params), 1);
  active[0] = 0;
  active[static_cast<size_t>(c.n_params - 1)] = 0;

  std::vector<double> g = shift_gradient_pure(c, theta, w, &active);
  CHECK(g[0] == 0.0);
  CHECK(g[static_cast<size_t>(c.n_params - 1)] == 0.0);

  // Active entries agree with the unrestricted gradient.
  std::vector<double> full = shift_gradient_pure(c, theta, w);
  for (int i = 1; i + 1 < c.n_params; ++i)
    CHECK(g[static_cast<size_t>(i)] ==
          doctest::Approx(full[static_cast<size_t>(i)]).epsilon(1e-13));
}

TEST_CASE("gradient vanishes at an optimum") {
  ParamCircuit c;
  c.n_qubits = 1;
  c.gates = {slot_gate(GateKind::RY, 0, 0)};
  c.n_params = 1;
  std::vector<double> w{1.0};
  // <Z>(theta) = cos(theta): extrema at 0 and pi.
  for (double t : {0.0, std::numbers::pi}) {
    std::vector<double> theta{t};
    std::vector<double> g = shift_gradient_pure(c, theta, w);
    CHECK(std::abs(g[0]) < 1e-12);
  }
}
