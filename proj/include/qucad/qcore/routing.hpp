// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qucad/qcore/circuit.hpp"

namespace qucad::qcore {

struct RoutingResult {
  ParamCircuit circuit;           // over physical qubits
  std::vector<int> final_layout;  // logical -> physical after all swaps
};

// Greedy shortest-path router: walks the circuit keeping a logical->physical
// placement (seeded by `layout`); any two-qubit gate whose operands are not
// adjacent gets SWAPs inserted along a BFS shortest path (first operand
// walks toward the second) until they are. Parameter slots are preserved.
RoutingResult route_circuit(const ParamCircuit& circuit,
                            const Coupling& hardware,
                            const std::vector<int>& layout);

}  // namespace qucad::qcore
