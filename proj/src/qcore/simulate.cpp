// SPDX-License-Identifier: Apache-2.0
#include "qucad/qcore/simulate.hpp"

#include <stdexcept>

namespace qucad::qcore {

StateVector simulate_noiseless(const ParamCircuit& circuit,
                               std::span<const double> theta,
                               const StateVector* init) {
  circuit.validate();
  StateVector psi =
      init ? *init : StateVector::zero_state(circuit.n_qubits);
  if (psi.n_qubits != circuit.n_qubits)
    throw std::invalid_argument("initial state size mismatch");
  for (const Gate& g : circuit.gates)
    apply_gate_state(psi, g, circuit.angle_of(g, theta));
  return psi;
}

void apply_gate_noise(DensityMatrix& rho, const Gate& g, double angle,
                      const NoiseModel& noise,
                      const compress::GateCostModel& cost) {
  const compress::GateCost c = cost.cost_of(g.kind, angle);
  if (c.n2q > 0) {
    if (!g.two_qubit())
      throw std::invalid_argument("2q cost charged to a 1q gate");
    const double p = noise.pair_prob(g.q0, g.q1);
    for (int i = 0; i < c.n2q; ++i) apply_depolarizing_2q(rho, g.q0, g.q1, p);
  }
  if (c.n1q > 0) {
    const int target = g.two_qubit() ? g.q1 : g.q0;
    const double p = noise.p1[static_cast<size_t>(target)];
    for (int i = 0; i < c.n1q; ++i) apply_depolarizing_1q(rho, target, p);
  }
}

DensityMatrix simulate_noisy(const ParamCircuit& circuit,
                             std::span<const double> theta,
                             const NoiseModel& noise,
                             const compress::GateCostModel& cost,
                             const DensityMatrix* init) {
  circuit.validate();
  noise.validate();
  if (noise.n_qubits != circuit.n_qubits)
    throw std::invalid_argument("noise model size != circuit size");
  DensityMatrix rho =
      init ? *init : DensityMatrix::zero_state(circuit.n_qubits);
  if (rho.n_qubits != circuit.n_qubits)
    throw std::invalid_argument("initial density size mismatch");
  for (const Gate& g : circuit.gates) {
    const double angle = circuit.angle_of(g, theta);
    apply_gate_density(rho, g, angle);
    apply_gate_noise(rho, g, angle, noise, cost);
  }
  return rho;
}

std::vector<double> measure_z_expectations(const DensityMatrix& rho,
                                           const NoiseModel& noise) {
  if (noise.n_qubits != rho.n_qubits)
    throw std::invalid_argument("noise model size != state size");
  std::vector<double> z(static_cast<size_t>(rho.n_qubits));
  for (int q = 0; q < rho.n_qubits; ++q) {
    const double z_true = 1.0 - 2.0 * rho.prob_one(q);
    const ReadoutConfusion& c = noise.readout[static_cast<size_t>(q)];
    z[static_cast<size_t>(q)] = c.offset() + c.scale() * z_true;
  }
  return z;
}

std::vector<double> z_expectations(const StateVector& psi) {
  std::vector<double> z(static_cast<size_t>(psi.n_qubits));
  for (int q = 0; q < psi.n_qubits; ++q)
    z[static_cast<size_t>(q)] = 1.0 - 2.0 * psi.prob_one(q);
  return z;
}

}  // namespace qucad::qcore
