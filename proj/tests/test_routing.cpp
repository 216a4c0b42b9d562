// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "oracle.hpp"
#include "qucad/qcore/routing.hpp"

using namespace qucad::qcore;

namespace {

// Moves logical qubit q's basis bit to physical position layout[q].
StateVector permute_state(const StateVector& in,
                          const std::vector<int>& layout) {
  StateVector out = StateVector::zero_state(in.n_qubits);
  out.amp.assign(in.dim(), {0, 0});
  for (size_t idx = 0; idx < in.dim(); ++idx) {
    size_t mapped = 0;
    for (int q = 0; q < in.n_qubits; ++q)
      if ((idx >> q) & 1) mapped |= size_t{1} << layout[static_cast<size_t>(q)];
    out.amp[mapped] = in.amp[idx];
  }
  return out;
}

std::vector<int> identity_layout(int n) {
  std::vector<int> l(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) l[static_cast<size_t>(i)] = i;
  return l;
}

}  // namespace

TEST_CASE("coupled gates pass through untouched") {
  ParamCircuit c;
  c.n_qubits = 3;
  c.gates = {slot_gate(GateKind::CRY, 0, 1, 0), cnot(1, 2)};
  c.n_params = 1;
  RoutingResult r = route_circuit(c, Coupling::line(3), identity_layout(3));
  CHECK(r.circuit.gates.size() == c.gates.size());
  CHECK(r.final_layout == identity_layout(3));
  CHECK(r.circuit.coupling == Coupling::line(3));
}

TEST_CASE("line topology end-to-end gate inserts exactly one swap") {
  ParamCircuit c;
  c.n_qubits = 3;
  c.gates = {cnot(0, 2)};
  RoutingResult r = route_circuit(c, Coupling::line(3), identity_layout(3));
  int n_swaps = 0;
  for (const Gate& g : r.circuit.gates)
    if (g.kind == GateKind::SWAP) ++n_swaps;
  CHECK(n_swaps == 1);
  CHECK(r.circuit.gates.size() == 2);
  // The walked operand ends somewhere else: layout updated.
  CHECK(r.final_layout != identity_layout(3));
}

TEST_CASE("routed circuits act like the original up to the final layout") {
  std::mt19937_64 rng(51);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 4;
    ParamCircuit c = oracle::random_circuit(n, 10, rng);
    c.coupling = {};  // logical circuit, no constraint
    Coupling hw = rep % 2 ? Coupling::line(n) : Coupling::ring(n);
    RoutingResult r = route_circuit(c, hw, identity_layout(n));
    r.circuit.validate();

    std::vector<double> theta = oracle::random_theta(c.n_params, rng);
    StateVector logical = simulate_noiseless(c, theta);
    StateVector physical = simulate_noiseless(r.circuit, theta);
    StateVector expected = permute_state(logical, r.final_layout);
    for (size_t i = 0; i < expected.dim(); ++i)
      CHECK(std::abs(expected.amp[i] - physical.amp[i]) < 1e-11);

    // Every two-qubit gate in the output respects the hardware coupling.
    for (const Gate& g : r.circuit.gates)
      if (g.two_qubit()) CHECK(hw.contains(g.q0, g.q1));
  }
}

TEST_CASE("disconnected hardware graphs are rejected") {
  ParamCircuit c;
  c.n_qubits = 4;
  c.gates = {cnot(0, 3)};
  Coupling broken;
  broken.add(0, 1);
  broken.add(2, 3);
  CHECK_THROWS_AS((void)route_circuit(c, broken, identity_layout(4)),
                  std::invalid_argument);
}
