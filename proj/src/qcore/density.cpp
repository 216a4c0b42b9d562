// SPDX-License-Identifier: Apache-2.0
#include "qucad/qcore/density.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

#include "qucad/qcore/kernels.hpp"

namespace qucad::qcore {

DensityMatrix DensityMatrix::zero_state(int n_qubits) {
  return pure(StateVector::zero_state(n_qubits));
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
  DensityMatrix rho;
  rho.n_qubits = psi.n_qubits;
  const size_t d = psi.amp.size();
  rho.elem.assign(d * d, c64{0.0, 0.0});
  for (size_t r = 0; r < d; ++r)
    for (size_t c = 0; c < d; ++c)
      rho.elem[r * d + c] = psi.amp[r] * std::conj(psi.amp[c]);
  return rho;
}

double DensityMatrix::trace_real() const {
  const size_t d = dim();
  double t = 0.0;
  for (size_t i = 0; i < d; ++i) t += elem[i * d + i].real();
  return t;
}

double DensityMatrix::hermiticity_error() const {
  const size_t d = dim();
  double worst = 0.0;
  for (size_t r = 0; r < d; ++r)
    for (size_t c = r; c < d; ++c) {
      const double e = std::abs(elem[r * d + c] - std::conj(elem[c * d + r]));
      if (e > worst) worst = e;
    }
  return worst;
}

double DensityMatrix::min_eigenvalue() const {
  const auto d = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXcd m(d, d);
  for (Eigen::Index r = 0; r < d; ++r)
    for (Eigen::Index c = 0; c < d; ++c) {
      const c64 v = elem[static_cast<size_t>(r) * static_cast<size_t>(d) +
                         static_cast<size_t>(c)];
      m(r, c) = v;
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double DensityMatrix::prob_one(int q) const {
  if (q < 0 || q >= n_qubits) throw std::invalid_argument("qubit out of range");
  const size_t d = dim();
  const size_t m = size_t{1} << q;
  double p = 0.0;
  for (size_t r = 0; r < d; ++r)
    if (r & m) p += elem[r * d + r].real();
  return p;
}

void DensityMatrix::check(double trace_tol, double herm_tol,
                          double eig_tol) const {
  if (std::abs(trace_real() - 1.0) > trace_tol)
    throw std::runtime_error("density matrix trace drifted from 1");
  if (hermiticity_error() > herm_tol)
    throw std::runtime_error("density matrix lost Hermiticity");
  if (min_eigenvalue() < -eig_tol)
    throw std::runtime_error("density matrix lost positivity");
}

void apply_gate_density(DensityMatrix& rho, const Gate& g, double angle) {
  const int n = rho.n_qubits;
  const int bits = 2 * n;
  if (!g.two_qubit()) {
    const Mat2 u = rotation_matrix(g.kind, angle);
    kernels::apply_1q(rho.elem.data(), bits, n + g.q0, u);
    kernels::apply_1q(rho.elem.data(), bits, g.q0, conjugate(u));
  } else {
    const Mat4 u = gate_matrix_2q(g.kind, angle);
    kernels::apply_2q(rho.elem.data(), bits, n + g.q0, n + g.q1, u);
    kernels::apply_2q(rho.elem.data(), bits, g.q0, g.q1, conjugate(u));
  }
}

void apply_gate_adjoint(DensityMatrix& obs, const Gate& g, double angle) {
  const int n = obs.n_qubits;
  const int bits = 2 * n;
  if (!g.two_qubit()) {
    const Mat2 ud = dagger(rotation_matrix(g.kind, angle));
    kernels::apply_1q(obs.elem.data(), bits, n + g.q0, ud);
    kernels::apply_1q(obs.elem.data(), bits, g.q0, conjugate(ud));
  } else {
    const Mat4 ud = dagger(gate_matrix_2q(g.kind, angle));
    kernels::apply_2q(obs.elem.data(), bits, n + g.q0, n + g.q1, ud);
    kernels::apply_2q(obs.elem.data(), bits, g.q0, g.q1, conjugate(ud));
  }
}

void apply_depolarizing_1q(DensityMatrix& rho, int q, double p) {
  if (q < 0 || q >= rho.n_qubits)
    throw std::invalid_argument("qubit out of range");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("bad channel prob");
  kernels::depolarize_1q(rho.elem.data(), rho.n_qubits, q, p);
}

void apply_depolarizing_2q(DensityMatrix& rho, int qa, int qb, double p) {
  if (qa < 0 || qa >= rho.n_qubits || qb < 0 || qb >= rho.n_qubits || qa == qb)
    throw std::invalid_argument("bad qubit pair");
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("bad channel prob");
  kernels::depolarize_2q(rho.elem.data(), rho.n_qubits, qa, qb, p);
}

double trace_product(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.n_qubits != b.n_qubits)
    throw std::invalid_argument("trace_product size mismatch");
  // Tr(AB) = sum_{r,c} A[r,c] * conj(B[r,c]) when both are Hermitian.
  double t = 0.0;
  for (size_t i = 0; i < a.elem.size(); ++i) {
    const c64& x = a.elem[i];
    const c64& y = b.elem[i];
    t += x.real() * y.real() + x.imag() * y.imag();
  }
  return t;
}

DensityMatrix weighted_z_observable(int n_qubits,
                                    const std::vector<double>& w) {
  if (static_cast<int>(w.size()) != n_qubits)
    throw std::invalid_argument("weight vector length != n_qubits");
  DensityMatrix o;
  o.n_qubits = n_qubits;
  const size_t d = size_t{1} << n_qubits;
  o.elem.assign(d * d, c64{0.0, 0.0});
  for (size_t r = 0; r < d; ++r) {
    double v = 0.0;
    for (int q = 0; q < n_qubits; ++q)
      v += (r >> q) & 1 ? -w[static_cast<size_t>(q)] : w[static_cast<size_t>(q)];
    o.elem[r * d + r] = v;
  }
  return o;
}

}  // namespace qucad::qcore
