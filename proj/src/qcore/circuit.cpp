// SPDX-License-Identifier: Apache-2.0
#include "qucad/qcore/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace qucad::qcore {

const char* to_string(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CRX: return "CRX";
    case GateKind::CRY: return "CRY";
    case GateKind::CRZ: return "CRZ";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
  }
  throw std::invalid_argument("unknown GateKind");
}

GateKind gate_kind_from_string(const std::string& name) {
  if (name == "RX") return GateKind::RX;
  if (name == "RY") return GateKind::RY;
  if (name == "RZ") return GateKind::RZ;
  if (name == "CRX") return GateKind::CRX;
  if (name == "CRY") return GateKind::CRY;
  if (name == "CRZ") return GateKind::CRZ;
  if (name == "CNOT") return GateKind::CNOT;
  if (name == "SWAP") return GateKind::SWAP;
  throw std::invalid_argument("unknown gate kind: " + name);
}

bool is_two_qubit(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
      return false;
    default:
      return true;
  }
}

bool is_rotation(GateKind kind) {
  return kind != GateKind::CNOT && kind != GateKind::SWAP;
}

namespace {

Gate make_gate(GateKind kind, int q0, int q1, int slot, double angle) {
  Gate g;
  g.kind = kind;
  g.q0 = q0;
  g.q1 = q1;
  g.slot = slot;
  g.angle = angle;
  return g;
}

}  // namespace

Gate slot_gate(GateKind kind, int q0, int slot) {
  return make_gate(kind, q0, -1, slot, 0.0);
}

Gate slot_gate(GateKind kind, int q0, int q1, int slot) {
  return make_gate(kind, q0, q1, slot, 0.0);
}

Gate fixed_gate(GateKind kind, int q0, double angle) {
  return make_gate(kind, q0, -1, -1, angle);
}

Gate fixed_gate(GateKind kind, int q0, int q1, double angle) {
  return make_gate(kind, q0, q1, -1, angle);
}

Gate cnot(int control, int target) {
  return make_gate(GateKind::CNOT, control, target, -1, 0.0);
}

Gate swap(int a, int b) { return make_gate(GateKind::SWAP, a, b, -1, 0.0); }

QubitPair make_pair_sorted(int a, int b) {
  return a < b ? QubitPair{a, b} : QubitPair{b, a};
}

void Coupling::add(int a, int b) {
  if (a == b) throw std::invalid_argument("coupling pair with equal qubits");
  pairs.insert(make_pair_sorted(a, b));
}

bool Coupling::contains(int a, int b) const {
  return pairs.count(make_pair_sorted(a, b)) > 0;
}

int Coupling::max_qubit() const {
  int m = -1;
  for (const auto& [a, b] : pairs) m = std::max(m, b);
  return m;
}

bool Coupling::connected(int n_qubits) const {
  if (n_qubits <= 0) return false;
  if (n_qubits == 1) return pairs.empty();
  for (const auto& [a, b] : pairs)
    if (a < 0 || b >= n_qubits) return false;
  // Union-find over the qubit set.
  std::vector<int> parent(n_qubits);
  for (int i = 0; i < n_qubits; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : pairs) parent[find(a)] = find(b);
  for (int i = 1; i < n_qubits; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

Coupling Coupling::ring(int n_qubits) {
  Coupling c;
  if (n_qubits == 2) {
    c.add(0, 1);
    return c;
  }
  for (int i = 0; i < n_qubits; ++i) c.add(i, (i + 1) % n_qubits);
  return c;
}

Coupling Coupling::line(int n_qubits) {
  Coupling c;
  for (int i = 0; i + 1 < n_qubits; ++i) c.add(i, i + 1);
  return c;
}

void ParamCircuit::validate() const {
  if (n_qubits <= 0) throw std::invalid_argument("circuit needs n_qubits > 0");
  if (n_params < 0) throw std::invalid_argument("negative n_params");
  std::vector<char> slot_seen(static_cast<size_t>(n_params), 0);
  for (const Gate& g : gates) {
    if (g.q0 < 0 || g.q0 >= n_qubits)
      throw std::invalid_argument("gate qubit out of range");
    if (g.two_qubit()) {
      if (g.q1 < 0 || g.q1 >= n_qubits || g.q1 == g.q0)
        throw std::invalid_argument("bad second qubit on two-qubit gate");
      if (!coupling.empty() && !coupling.contains(g.q0, g.q1))
        throw std::invalid_argument("two-qubit gate off the coupling graph");
    } else if (g.q1 != -1) {
      throw std::invalid_argument("single-qubit gate with a second qubit");
    }
    if (g.parameterized()) {
      if (!is_rotation(g.kind))
        throw std::invalid_argument("parameter slot on a fixed gate");
      if (g.slot >= n_params)
        throw std::invalid_argument("parameter slot out of range");
      if (slot_seen[static_cast<size_t>(g.slot)])
        throw std::invalid_argument("parameter slot used twice");
      slot_seen[static_cast<size_t>(g.slot)] = 1;
    }
  }
}

double ParamCircuit::angle_of(const Gate& g,
                              std::span<const double> theta) const {
  if (!g.parameterized()) return g.angle;
  if (static_cast<size_t>(g.slot) >= theta.size())
    throw std::invalid_argument("theta shorter than referenced slot");
  return theta[static_cast<size_t>(g.slot)];
}

std::vector<int> ParamCircuit::slot_to_gate() const {
  std::vector<int> owner(static_cast<size_t>(n_params), -1);
  for (size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (!g.parameterized()) continue;
    if (g.slot >= n_params || owner[static_cast<size_t>(g.slot)] != -1)
      throw std::invalid_argument("parameter slots must be used exactly once");
    owner[static_cast<size_t>(g.slot)] = static_cast<int>(i);
  }
  for (size_t s = 0; s < owner.size(); ++s)
    if (owner[s] < 0)
      throw std::invalid_argument("parameter slot never referenced");
  return owner;
}

}  // namespace qucad::qcore
