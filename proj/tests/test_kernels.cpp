// SPDX-License-Identifier: Apache-2.0
//
// Statevector kernels against the dense-matrix reference.
#include <doctest.h>

#include "oracle.hpp"
#include "qucad/common/angles.hpp"

using namespace qucad::qcore;

namespace {

double max_abs_diff(const StateVector& s, const oracle::CVec& v) {
  double m = 0;
  for (size_t i = 0; i < s.dim(); ++i)
    m = std::max(m, std::abs(s.amp[i] - v(static_cast<int>(i))));
  return m;
}

StateVector random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  StateVector s = StateVector::zero_state(n);
  double norm2 = 0;
  for (auto& a : s.amp) {
    a = {g(rng), g(rng)};
    norm2 += std::norm(a);
  }
  for (auto& a : s.amp) a /= std::sqrt(norm2);
  return s;
}

}  // namespace

TEST_CASE("single gates match the dense reference on random states") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> angle(0, qucad::two_pi);
  for (int n = 1; n <= 4; ++n) {
    for (int rep = 0; rep < 40; ++rep) {
      ParamCircuit c = oracle::random_circuit(std::max(n, 2), 1, rng);
      const Gate& g = c.gates.front();
      const double a = angle(rng);
      StateVector s = random_state(c.n_qubits, rng);
      oracle::CVec v =
          oracle::gate_unitary(g, a, c.n_qubits) * oracle::to_eigen(s);
      apply_gate_state(s, g, a);
      CHECK(max_abs_diff(s, v) < 1e-12);
    }
  }
}

TEST_CASE("named examples") {
  SUBCASE("RX(0) leaves any state unchanged") {
    std::mt19937_64 rng(22);
    StateVector s = random_state(3, rng);
    StateVector before = s;
    apply_gate_state(s, fixed_gate(GateKind::RX, 1, 0.0), 0.0);
    for (size_t i = 0; i < s.dim(); ++i)
      CHECK(std::abs(s.amp[i] - before.amp[i]) == 0.0);
  }
  SUBCASE("RY(pi) flips |0> to |1> up to global phase") {
    StateVector s = StateVector::zero_state(1);
    apply_gate_state(s, fixed_gate(GateKind::RY, 0, std::numbers::pi),
                     std::numbers::pi);
    CHECK(std::abs(s.amp[0]) < 1e-15);
    CHECK(std::abs(s.amp[1]) == doctest::Approx(1.0));
  }
  SUBCASE("CRY(pi/2) on |10> rotates the target inside the control block") {
    // q0 = control = 1, q1 = target = 0; little-endian index 0b01 = 1.
    StateVector s = StateVector::basis_state(2, 1);
    const double a = std::numbers::pi / 2;
    apply_gate_state(s, fixed_gate(GateKind::CRY, 0, 1, a), a);
    CHECK(std::abs(s.amp[0]) < 1e-15);
    CHECK(std::abs(s.amp[2]) < 1e-15);
    CHECK(s.amp[1].real() == doctest::Approx(std::cos(std::numbers::pi / 4)));
    CHECK(s.amp[3].real() == doctest::Approx(std::sin(std::numbers::pi / 4)));
  }
}

TEST_CASE("simulate_noiseless matches the dense circuit unitary") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 30; ++rep) {
    ParamCircuit c = oracle::random_circuit(3, 10, rng);
    std::vector<double> theta = oracle::random_theta(c.n_params, rng);
    StateVector out = simulate_noiseless(c, theta);
    oracle::CVec ref = oracle::circuit_unitary(c, theta).col(0);
    CHECK(max_abs_diff(out, ref) < 1e-11);
    CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("simulate_noiseless degenerate cases") {
  SUBCASE("empty circuit returns the input") {
    ParamCircuit c;
    c.n_qubits = 2;
    StateVector in = StateVector::basis_state(2, 3);
    StateVector out = simulate_noiseless(c, {}, &in);
    CHECK(max_abs_diff(out, oracle::to_eigen(in)) == 0.0);
  }
  SUBCASE("all-zero rotation angles act as identity") {
    ParamCircuit c;
    c.n_qubits = 2;
    c.gates = {slot_gate(GateKind::RY, 0, 0), slot_gate(GateKind::CRX, 0, 1, 1),
               fixed_gate(GateKind::RZ, 1, 0.0)};
    c.n_params = 2;
    std::vector<double> theta{0.0, 0.0};
    StateVector out = simulate_noiseless(c, theta);
    CHECK(std::abs(out.amp[0] - 1.0) < 1e-15);
  }
  SUBCASE("RY then CRY at pi maps |00> to |11>") {
    ParamCircuit c;
    c.n_qubits = 2;
    c.gates = {slot_gate(GateKind::RY, 0, 0), slot_gate(GateKind::CRY, 0, 1, 1)};
    c.n_params = 2;
    std::vector<double> theta{std::numbers::pi, std::numbers::pi};
    StateVector out = simulate_noiseless(c, theta);
    CHECK(std::abs(out.amp[3]) == doctest::Approx(1.0));
    for (int i = 0; i < 3; ++i) CHECK(std::abs(out.amp[i]) < 1e-12);
  }
  SUBCASE("zero-angle gates can be deleted bit-for-bit") {
    std::mt19937_64 rng(24);
    ParamCircuit c = oracle::random_circuit(3, 8, rng);
    std::vector<double> theta = oracle::random_theta(c.n_params, rng);
    // Append a fixed zero-angle rotation, then remove it again.
    ParamCircuit with = c;
    with.gates.push_back(fixed_gate(GateKind::CRZ, 0, 2, 0.0));
    StateVector a = simulate_noiseless(c, theta);
    StateVector b = simulate_noiseless(with, theta);
    for (size_t i = 0; i < a.dim(); ++i)
      CHECK(std::abs(a.amp[i] - b.amp[i]) < 1e-12);
  }
}

TEST_CASE("parameter length is enforced") {
  ParamCircuit c;
  c.n_qubits = 1;
  c.gates = {slot_gate(GateKind::RY, 0, 0)};
  c.n_params = 1;
  CHECK_THROWS_AS((void)simulate_noiseless(c, {}), std::invalid_argument);
}
