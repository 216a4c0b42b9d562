// SPDX-License-Identifier: Apache-2.0
#include "qucad/qcore/routing.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace qucad::qcore {

namespace {

// Shortest path from -> to, deterministic (BFS expands neighbors in
// ascending index order). Returns the full vertex path including endpoints.
std::vector<int> bfs_path(const std::vector<std::vector<int>>& adj, int from,
                          int to) {
  std::vector<int> parent(adj.size(), -1);
  parent[static_cast<size_t>(from)] = from;
  std::deque<int> queue{from};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int nb : adj[static_cast<size_t>(v)]) {
      if (parent[static_cast<size_t>(nb)] == -1) {
        parent[static_cast<size_t>(nb)] = v;
        queue.push_back(nb);
      }
    }
  }
  if (parent[static_cast<size_t>(to)] == -1)
    throw std::invalid_argument("hardware coupling is not connected");
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent[static_cast<size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

RoutingResult route_circuit(const ParamCircuit& circuit,
                            const Coupling& hardware,
                            const std::vector<int>& layout) {
  circuit.validate();
  const int n_phys = hardware.max_qubit() + 1;
  if (!hardware.connected(n_phys))
    throw std::invalid_argument("hardware coupling is not connected");
  if (static_cast<int>(layout.size()) != circuit.n_qubits)
    throw std::invalid_argument("layout length != logical qubit count");
  if (circuit.n_qubits > n_phys)
    throw std::invalid_argument("more logical qubits than physical");

  std::vector<int> inv(static_cast<size_t>(n_phys), -1);  // physical -> logical
  std::vector<int> pos(layout);                           // logical -> physical
  for (int lq = 0; lq < circuit.n_qubits; ++lq) {
    const int pq = pos[static_cast<size_t>(lq)];
    if (pq < 0 || pq >= n_phys || inv[static_cast<size_t>(pq)] != -1)
      throw std::invalid_argument("layout must be injective into the device");
    inv[static_cast<size_t>(pq)] = lq;
  }

  std::vector<std::vector<int>> adj(static_cast<size_t>(n_phys));
  for (const auto& [a, b] : hardware.pairs) {
    adj[static_cast<size_t>(a)].push_back(b);
    adj[static_cast<size_t>(b)].push_back(a);
  }
  for (auto& nbs : adj) std::sort(nbs.begin(), nbs.end());

  RoutingResult out;
  out.circuit.n_qubits = n_phys;
  out.circuit.n_params = circuit.n_params;
  out.circuit.coupling = hardware;

  auto do_swap = [&](int pa, int pb) {
    out.circuit.gates.push_back(swap(pa, pb));
    const int la = inv[static_cast<size_t>(pa)];
    const int lb = inv[static_cast<size_t>(pb)];
    std::swap(inv[static_cast<size_t>(pa)], inv[static_cast<size_t>(pb)]);
    if (la != -1) pos[static_cast<size_t>(la)] = pb;
    if (lb != -1) pos[static_cast<size_t>(lb)] = pa;
  };

  for (const Gate& g : circuit.gates) {
    Gate placed = g;
    if (!g.two_qubit()) {
      placed.q0 = pos[static_cast<size_t>(g.q0)];
      out.circuit.gates.push_back(placed);
      continue;
    }
    const int pb = pos[static_cast<size_t>(g.q1)];
    if (!hardware.contains(pos[static_cast<size_t>(g.q0)], pb)) {
      // Walk the first operand along a shortest path until adjacent.
      const std::vector<int> path =
          bfs_path(adj, pos[static_cast<size_t>(g.q0)], pb);
      for (size_t i = 0; i + 2 < path.size(); ++i) do_swap(path[i], path[i + 1]);
    }
    placed.q0 = pos[static_cast<size_t>(g.q0)];
    placed.q1 = pos[static_cast<size_t>(g.q1)];
    out.circuit.gates.push_back(placed);
  }

  out.final_layout = pos;
  out.circuit.validate();
  return out;
}

}  // namespace qucad::qcore
