// SPDX-License-Identifier: Apache-2.0
#include "qucad/qcore/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace qucad::qcore {

ReadoutConfusion ReadoutConfusion::from_flip_probs(double p1_given_0,
                                                   double p0_given_1) {
  ReadoutConfusion c;
  c.m[0][0] = 1.0 - p1_given_0;
  c.m[1][0] = p1_given_0;
  c.m[0][1] = p0_given_1;
  c.m[1][1] = 1.0 - p0_given_1;
  return c;
}

NoiseModel NoiseModel::ideal(int n_qubits, const Coupling& coupling) {
  NoiseModel nm;
  nm.n_qubits = n_qubits;
  nm.p1.assign(static_cast<size_t>(n_qubits), 0.0);
  nm.readout.assign(static_cast<size_t>(n_qubits), ReadoutConfusion{});
  for (const auto& pr : coupling.pairs) nm.p2[pr] = 0.0;
  return nm;
}

double NoiseModel::pair_prob(int a, int b) const {
  auto it = p2.find(make_pair_sorted(a, b));
  if (it == p2.end())
    throw std::invalid_argument("noise model has no entry for qubit pair");
  return it->second;
}

void NoiseModel::validate() const {
  if (n_qubits <= 0) throw std::invalid_argument("noise model needs qubits");
  if (static_cast<int>(p1.size()) != n_qubits ||
      static_cast<int>(readout.size()) != n_qubits)
    throw std::invalid_argument("noise model field lengths != n_qubits");
  auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
  for (double p : p1)
    if (!in_unit(p)) throw std::invalid_argument("1q prob outside [0,1]");
  for (const auto& [pr, p] : p2) {
    if (pr.first < 0 || pr.second >= n_qubits)
      throw std::invalid_argument("pair qubit out of range");
    if (!in_unit(p)) throw std::invalid_argument("2q prob outside [0,1]");
  }
  for (const ReadoutConfusion& c : readout) {
    for (int truth = 0; truth < 2; ++truth) {
      const double col = c.p(0, truth) + c.p(1, truth);
      if (std::abs(col - 1.0) > 1e-12)
        throw std::invalid_argument("confusion column does not sum to 1");
      if (!in_unit(c.p(0, truth)) || !in_unit(c.p(1, truth)))
        throw std::invalid_argument("confusion entry outside [0,1]");
    }
  }
}

}  // namespace qucad::qcore
