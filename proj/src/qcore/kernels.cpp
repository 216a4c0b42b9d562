// SPDX-License-Identifier: Apache-2.0
#include "qucad/qcore/kernels.hpp"

namespace qucad::qcore::kernels {

void apply_1q(c64* v, int n_bits, int bit, const Mat2& u) {
  const size_t dim = size_t{1} << n_bits;
  const size_t m = size_t{1} << bit;
  for (size_t g = 0; g < dim; g += m << 1) {
    for (size_t i = g; i < g + m; ++i) {
      const c64 a = v[i];
      const c64 b = v[i | m];
      v[i] = u[0] * a + u[1] * b;
      v[i | m] = u[2] * a + u[3] * b;
    }
  }
}

void apply_2q(c64* v, int n_bits, int bit_hi, int bit_lo, const Mat4& u) {
  const size_t dim = size_t{1} << n_bits;
  const size_t mh = size_t{1} << bit_hi;
  const size_t ml = size_t{1} << bit_lo;
  const size_t lo = mh < ml ? mh : ml;
  const size_t hi = mh < ml ? ml : mh;
  for (size_t a = 0; a < dim; a += hi << 1) {
    for (size_t b = a; b < a + hi; b += lo << 1) {
      for (size_t base = b; base < b + lo; ++base) {
        const c64 s0 = v[base];             // q0=0 q1=0
        const c64 s1 = v[base | ml];        // q0=0 q1=1
        const c64 s2 = v[base | mh];        // q0=1 q1=0
        const c64 s3 = v[base | mh | ml];   // q0=1 q1=1
        v[base] = u[0] * s0 + u[1] * s1 + u[2] * s2 + u[3] * s3;
        v[base | ml] = u[4] * s0 + u[5] * s1 + u[6] * s2 + u[7] * s3;
        v[base | mh] = u[8] * s0 + u[9] * s1 + u[10] * s2 + u[11] * s3;
        v[base | mh | ml] = u[12] * s0 + u[13] * s1 + u[14] * s2 + u[15] * s3;
      }
    }
  }
}

void depolarize_1q(c64* rho, int n_qubits, int q, double p) {
  if (p == 0.0) return;
  const size_t dim = size_t{1} << (2 * n_qubits);
  const size_t mk = size_t{1} << (n_qubits + q);  // ket (row) bit
  const size_t mb = size_t{1} << q;               // bra (col) bit
  const size_t skip = mk | mb;
  const double keep = 1.0 - p;
  for (size_t i = 0; i < dim; ++i) {
    if (i & skip) continue;
    const size_t i00 = i;
    const size_t i01 = i | mb;
    const size_t i10 = i | mk;
    const size_t i11 = i | mk | mb;
    const c64 mix = 0.5 * p * (rho[i00] + rho[i11]);
    rho[i00] = keep * rho[i00] + mix;
    rho[i11] = keep * rho[i11] + mix;
    rho[i01] *= keep;
    rho[i10] *= keep;
  }
}

void depolarize_2q(c64* rho, int n_qubits, int qa, int qb, double p) {
  if (p == 0.0) return;
  const size_t dim = size_t{1} << (2 * n_qubits);
  const size_t mka = size_t{1} << (n_qubits + qa);
  const size_t mkb = size_t{1} << (n_qubits + qb);
  const size_t mba = size_t{1} << qa;
  const size_t mbb = size_t{1} << qb;
  const size_t skip = mka | mkb | mba | mbb;
  const double keep = 1.0 - p;
  for (size_t i = 0; i < dim; ++i) {
    if (i & skip) continue;
    // Subspace entry (rowpair, colpair), rowpair = (bit a, bit b) of the kets.
    size_t idx[4][4];
    for (size_t r = 0; r < 4; ++r) {
      const size_t rk = (r & 2 ? mka : 0) | (r & 1 ? mkb : 0);
      for (size_t c = 0; c < 4; ++c)
        idx[r][c] = i | rk | (c & 2 ? mba : 0) | (c & 1 ? mbb : 0);
    }
    c64 tr = 0.0;
    for (size_t d = 0; d < 4; ++d) tr += rho[idx[d][d]];
    const c64 mix = 0.25 * p * tr;
    for (size_t r = 0; r < 4; ++r)
      for (size_t c = 0; c < 4; ++c) {
        c64& e = rho[idx[r][c]];
        e = r == c ? keep * e + mix : keep * e;
      }
  }
}

}  // namespace qucad::qcore::kernels
