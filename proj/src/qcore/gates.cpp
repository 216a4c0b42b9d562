// SPDX-License-Identifier: Apache-2.0
#include "qucad/qcore/gates.hpp"

#include <cmath>
#include <stdexcept>

namespace qucad::qcore {

Mat2 rotation_matrix(GateKind kind, double angle) {
  const double h = 0.5 * angle;
  const double c = std::cos(h);
  const double s = std::sin(h);
  switch (kind) {
    case GateKind::RX:
      return {c64{c, 0}, c64{0, -s}, c64{0, -s}, c64{c, 0}};
    case GateKind::RY:
      return {c64{c, 0}, c64{-s, 0}, c64{s, 0}, c64{c, 0}};
    case GateKind::RZ:
      return {c64{c, -s}, c64{0, 0}, c64{0, 0}, c64{c, s}};
    default:
      throw std::invalid_argument("rotation_matrix: not a 1q rotation");
  }
}

Mat4 gate_matrix_2q(GateKind kind, double angle) {
  Mat4 u{};  // zero-initialized
  auto at = [&u](int r, int c) -> c64& { return u[static_cast<size_t>(r * 4 + c)]; };
  switch (kind) {
    case GateKind::CRX:
    case GateKind::CRY:
    case GateKind::CRZ: {
      GateKind base = kind == GateKind::CRX   ? GateKind::RX
                      : kind == GateKind::CRY ? GateKind::RY
                                              : GateKind::RZ;
      Mat2 r = rotation_matrix(base, angle);
      at(0, 0) = 1.0;
      at(1, 1) = 1.0;
      at(2, 2) = r[0];
      at(2, 3) = r[1];
      at(3, 2) = r[2];
      at(3, 3) = r[3];
      return u;
    }
    case GateKind::CNOT:
      at(0, 0) = 1.0;
      at(1, 1) = 1.0;
      at(2, 3) = 1.0;
      at(3, 2) = 1.0;
      return u;
    case GateKind::SWAP:
      at(0, 0) = 1.0;
      at(1, 2) = 1.0;
      at(2, 1) = 1.0;
      at(3, 3) = 1.0;
      return u;
    default:
      throw std::invalid_argument("gate_matrix_2q: not a 2q gate");
  }
}

Mat2 dagger(const Mat2& u) {
  return {std::conj(u[0]), std::conj(u[2]), std::conj(u[1]), std::conj(u[3])};
}

Mat4 dagger(const Mat4& u) {
  Mat4 d;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      d[static_cast<size_t>(r * 4 + c)] = std::conj(u[static_cast<size_t>(c * 4 + r)]);
  return d;
}

Mat2 conjugate(const Mat2& u) {
  Mat2 v;
  for (size_t i = 0; i < 4; ++i) v[i] = std::conj(u[i]);
  return v;
}

Mat4 conjugate(const Mat4& u) {
  Mat4 v;
  for (size_t i = 0; i < 16; ++i) v[i] = std::conj(u[i]);
  return v;
}

}  // namespace qucad::qcore
