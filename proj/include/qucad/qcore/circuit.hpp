// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qucad::qcore {

enum class GateKind { RX, RY, RZ, CRX, CRY, CRZ, CNOT, SWAP };

const char* to_string(GateKind kind);
GateKind gate_kind_from_string(const std::string& name);

bool is_two_qubit(GateKind kind);

// True for the rotation gates (RX..CRZ), which carry an angle; CNOT and SWAP
// are fixed maps.
bool is_rotation(GateKind kind);

// One gate application. Rotation gates either reference a trainable
// parameter (slot >= 0) or carry a fixed angle (slot < 0). For two-qubit
// gates q0 is the control (first operand for SWAP) and q1 the target.
struct Gate {
  GateKind kind = GateKind::RY;
  int q0 = 0;
  int q1 = -1;
  int slot = -1;
  double angle = 0.0;

  bool two_qubit() const { return is_two_qubit(kind); }
  bool parameterized() const { return slot >= 0; }
};

Gate slot_gate(GateKind kind, int q0, int slot);
Gate slot_gate(GateKind kind, int q0, int q1, int slot);
Gate fixed_gate(GateKind kind, int q0, double angle);
Gate fixed_gate(GateKind kind, int q0, int q1, double angle);
Gate cnot(int control, int target);
Gate swap(int a, int b);

// Unordered qubit pair, stored as (min, max).
using QubitPair = std::pair<int, int>;
QubitPair make_pair_sorted(int a, int b);

// Undirected hardware connectivity.
struct Coupling {
  std::set<QubitPair> pairs;

  void add(int a, int b);
  bool contains(int a, int b) const;
  bool empty() const { return pairs.empty(); }

  // Largest qubit index mentioned, or -1 when empty.
  int max_qubit() const;

  // All pairs within [0, n_qubits) and the graph connects every qubit.
  bool connected(int n_qubits) const;

  static Coupling ring(int n_qubits);
  static Coupling line(int n_qubits);

  bool operator==(const Coupling&) const = default;
};

// A gate list over a shared parameter vector.
struct ParamCircuit {
  int n_qubits = 0;
  int n_params = 0;
  std::vector<Gate> gates;
  Coupling coupling;

  // Throws std::invalid_argument on out-of-range qubits, bad slots, or
  // two-qubit gates off the coupling (when a coupling is present).
  void validate() const;

  double angle_of(const Gate& g, std::span<const double> theta) const;

  // Gate index that owns each parameter slot; slots are required to be
  // referenced by exactly one gate (validated).
  std::vector<int> slot_to_gate() const;
};

}  // namespace qucad::qcore
