// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>

#include "qucad/qcore/circuit.hpp"

namespace qucad::qcore {

using c64 = std::complex<double>;

// Row-major 2x2 / 4x4 unitaries. For two-qubit matrices the basis index is
// (bit of q0 << 1) | bit of q1, i.e. the control is the high bit of the
// 4-dim subspace.
using Mat2 = std::array<c64, 4>;
using Mat4 = std::array<c64, 16>;

Mat2 rotation_matrix(GateKind kind, double angle);  // RX / RY / RZ
Mat4 gate_matrix_2q(GateKind kind, double angle);   // CRX..CRZ, CNOT, SWAP

// Unitary of any gate kind; 1q kinds are embedded trivially. Convenience for
// dense reference code and adjoint sweeps.
Mat2 dagger(const Mat2& u);
Mat4 dagger(const Mat4& u);
Mat2 conjugate(const Mat2& u);
Mat4 conjugate(const Mat4& u);

}  // namespace qucad::qcore
