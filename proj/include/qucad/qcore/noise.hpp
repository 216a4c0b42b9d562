// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <vector>

#include "qucad/qcore/circuit.hpp"

namespace qucad::qcore {

// Column-stochastic 2x2 readout confusion: m[observed][true], columns sum
// to 1. Identity = perfect readout.
struct ReadoutConfusion {
  std::array<std::array<double, 2>, 2> m{{{1.0, 0.0}, {0.0, 1.0}}};

  static ReadoutConfusion from_flip_probs(double p1_given_0,
                                          double p0_given_1);
  double p(int observed, int truth) const {
    return m[static_cast<size_t>(observed)][static_cast<size_t>(truth)];
  }
  // Misreported-Z map: z_observed = offset() + scale() * z_true.
  double scale() const { return m[0][0] + m[1][1] - 1.0; }
  double offset() const { return m[0][1] - m[1][0]; }
};

// Depolarizing probabilities charged per basis-gate occurrence plus readout
// confusion per qubit.
struct NoiseModel {
  int n_qubits = 0;
  std::vector<double> p1;                 // per qubit
  std::map<QubitPair, double> p2;         // per coupled pair
  std::vector<ReadoutConfusion> readout;  // per qubit

  static NoiseModel ideal(int n_qubits, const Coupling& coupling);

  double pair_prob(int a, int b) const;  // throws if the pair is unknown

  // Probabilities in [0,1], confusion columns sum to 1 within 1e-12.
  void validate() const;
};

}  // namespace qucad::qcore
