// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qucad/qcore/gates.hpp"

namespace qucad::qcore {

// Pure state over n_qubits, little-endian: qubit 0 is the least significant
// bit of the basis index.
struct StateVector {
  int n_qubits = 0;
  std::vector<c64> amp;

  static StateVector zero_state(int n_qubits);
  static StateVector basis_state(int n_qubits, size_t index);

  size_t dim() const { return amp.size(); }
  double norm() const;

  // P(qubit q = 1).
  double prob_one(int q) const;
};

// Applies one gate with an explicit angle value (ignored for CNOT/SWAP).
void apply_gate_state(StateVector& psi, const Gate& g, double angle);

}  // namespace qucad::qcore
