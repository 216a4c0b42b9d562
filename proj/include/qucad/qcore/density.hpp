// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "qucad/qcore/gates.hpp"
#include "qucad/qcore/state.hpp"

namespace qucad::qcore {

// Density matrix over n_qubits, stored row-major as a flat length-4^n array:
// elem[row * 2^n + col]. Row index bits live at positions n..2n-1 of the flat
// index and column bits at 0..n-1, so the gate kernels apply directly.
struct DensityMatrix {
  int n_qubits = 0;
  std::vector<c64> elem;

  static DensityMatrix zero_state(int n_qubits);
  static DensityMatrix pure(const StateVector& psi);

  size_t dim() const { return size_t{1} << n_qubits; }
  c64 at(size_t row, size_t col) const { return elem[row * dim() + col]; }

  double trace_real() const;
  // max_{r,c} |rho[r,c] - conj(rho[c,r])|
  double hermiticity_error() const;
  // Smallest eigenvalue of the Hermitian part; negative values beyond
  // roundoff indicate a bug in channel application.
  double min_eigenvalue() const;

  // P(qubit q = 1) from the diagonal.
  double prob_one(int q) const;

  // Throws std::runtime_error if trace/Hermiticity/positivity drift past the
  // given tolerances.
  void check(double trace_tol = 1e-9, double herm_tol = 1e-10,
             double eig_tol = 1e-8) const;
};

// rho <- U rho U^dagger (angle ignored for CNOT/SWAP).
void apply_gate_density(DensityMatrix& rho, const Gate& g, double angle);

// O <- U^dagger O U, the Heisenberg-picture pull-back of an observable. Same
// storage layout as DensityMatrix.
void apply_gate_adjoint(DensityMatrix& obs, const Gate& g, double angle);

// Depolarizing channels; p is the full mixing probability.
void apply_depolarizing_1q(DensityMatrix& rho, int q, double p);
void apply_depolarizing_2q(DensityMatrix& rho, int qa, int qb, double p);

// Tr(A B) for Hermitian A, B (real by construction).
double trace_product(const DensityMatrix& a, const DensityMatrix& b);

// Observable sum_q w[q] * Z_q as a diagonal DensityMatrix-layout matrix.
DensityMatrix weighted_z_observable(int n_qubits,
                                    const std::vector<double>& w);

}  // namespace qucad::qcore
