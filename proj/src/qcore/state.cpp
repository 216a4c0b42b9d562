// SPDX-License-Identifier: Apache-2.0
#include "qucad/qcore/state.hpp"

#include <cmath>
#include <stdexcept>

#include "qucad/qcore/kernels.hpp"

namespace qucad::qcore {

StateVector StateVector::zero_state(int n_qubits) {
  return basis_state(n_qubits, 0);
}

StateVector StateVector::basis_state(int n_qubits, size_t index) {
  if (n_qubits <= 0 || n_qubits > 16)
    throw std::invalid_argument("n_qubits out of supported range");
  StateVector s;
  s.n_qubits = n_qubits;
  s.amp.assign(size_t{1} << n_qubits, c64{0.0, 0.0});
  if (index >= s.amp.size()) throw std::invalid_argument("basis index too big");
  s.amp[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double n2 = 0.0;
  for (const c64& a : amp) n2 += std::norm(a);
  return std::sqrt(n2);
}

double StateVector::prob_one(int q) const {
  if (q < 0 || q >= n_qubits) throw std::invalid_argument("qubit out of range");
  const size_t m = size_t{1} << q;
  double p = 0.0;
  for (size_t i = 0; i < amp.size(); ++i)
    if (i & m) p += std::norm(amp[i]);
  return p;
}

void apply_gate_state(StateVector& psi, const Gate& g, double angle) {
  if (!g.two_qubit()) {
    kernels::apply_1q(psi.amp.data(), psi.n_qubits, g.q0,
                      rotation_matrix(g.kind, angle));
  } else {
    kernels::apply_2q(psi.amp.data(), psi.n_qubits, g.q0, g.q1,
                      gate_matrix_2q(g.kind, angle));
  }
}

}  // namespace qucad::qcore
