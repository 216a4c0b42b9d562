// SPDX-License-Identifier: Apache-2.0
#include "qucad/compress/cost_model.hpp"

#include <numbers>
#include <stdexcept>

#include "qucad/common/angles.hpp"

namespace qucad::compress {

using qcore::GateKind;

GateCostModel GateCostModel::standard() {
  GateCostModel m;
  for (GateKind k : {GateKind::RX, GateKind::RY, GateKind::RZ}) {
    m.set_generic(k, {1, 0});
    m.add_override(k, 0.0, {0, 0});
  }
  for (GateKind k : {GateKind::CRX, GateKind::CRY, GateKind::CRZ}) {
    m.set_generic(k, {2, 2});
    m.add_override(k, 0.0, {0, 0});
    m.add_override(k, std::numbers::pi, {2, 1});
  }
  m.set_generic(GateKind::CNOT, {0, 1});
  m.set_generic(GateKind::SWAP, {0, 3});
  return m;
}

void GateCostModel::set_generic(GateKind kind, GateCost cost) {
  generic_[static_cast<size_t>(kind)] = cost;
}

void GateCostModel::add_override(GateKind kind, double angle, GateCost cost) {
  if (!qcore::is_rotation(kind))
    throw std::invalid_argument("angle override on a fixed gate kind");
  overrides_.push_back({kind, wrap_angle(angle), cost});
}

GateCost GateCostModel::generic(GateKind kind) const {
  return generic_[static_cast<size_t>(kind)];
}

std::optional<GateCost> GateCostModel::override_at(GateKind kind,
                                                   double angle) const {
  for (const Override& o : overrides_)
    if (o.kind == kind && circular_distance(angle, o.angle) < level_match_tol)
      return o.cost;
  return std::nullopt;
}

GateCost GateCostModel::cost_of(GateKind kind, double angle) const {
  if (qcore::is_rotation(kind))
    if (auto hit = override_at(kind, angle)) return *hit;
  return generic(kind);
}

}  // namespace qucad::compress
