// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>

#include "qucad/qcore/gates.hpp"

namespace qucad::qcore::kernels {

// In-place linear-algebra primitives on a length-2^n_bits complex array.
// Statevectors use n_bits = n_qubits; density matrices are stored flat as
// index = row * 2^n + col and reuse the same kernels with row ("ket") bits at
// n + q and column ("bra") bits at q.

void apply_1q(c64* v, int n_bits, int bit, const Mat2& u);

// bit_hi addresses the high bit of the 4-dim subspace, matching the Mat4
// basis convention (control = q0 = high bit).
void apply_2q(c64* v, int n_bits, int bit_hi, int bit_lo, const Mat4& u);

// rho <- (1-p) rho + p * (I/2 (x) Tr_q rho), flat density matrix over
// n_qubits. Likewise for the two-qubit variant with I/4 and Tr over the pair.
void depolarize_1q(c64* rho, int n_qubits, int q, double p);
void depolarize_2q(c64* rho, int n_qubits, int qa, int qb, double p);

}  // namespace qucad::qcore::kernels
