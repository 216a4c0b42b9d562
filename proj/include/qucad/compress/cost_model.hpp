// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "qucad/qcore/circuit.hpp"

namespace qucad::compress {

struct GateCost {
  int n1q = 0;
  int n2q = 0;

  GateCost& operator+=(const GateCost& o) {
    n1q += o.n1q;
    n2q += o.n2q;
    return *this;
  }
  bool operator==(const GateCost&) const = default;
};

// Basis-gate occurrence counts per gate kind, with optional overrides that
// fire when the realized angle sits exactly (circular distance < 1e-12) on a
// special value. Defaults: plain rotations cost one 1q gate but are free at
// angle 0; controlled rotations cost 2x2q + 2x1q generically, are free at 0
// and drop to 1x2q + 2x1q at pi; CNOT is one 2q gate and SWAP three.
class GateCostModel {
 public:
  static constexpr double level_match_tol = 1e-12;

  struct Override {
    qcore::GateKind kind;
    double angle;
    GateCost cost;
  };

  static GateCostModel standard();

  void set_generic(qcore::GateKind kind, GateCost cost);
  void add_override(qcore::GateKind kind, double angle, GateCost cost);

  GateCost generic(qcore::GateKind kind) const;
  std::optional<GateCost> override_at(qcore::GateKind kind,
                                      double angle) const;

  // Cost for a gate realized at `angle` (ignored for CNOT/SWAP).
  GateCost cost_of(qcore::GateKind kind, double angle) const;

  const std::vector<Override>& overrides() const { return overrides_; }

 private:
  GateCost generic_[8]{};
  std::vector<Override> overrides_;
};

}  // namespace qucad::compress
