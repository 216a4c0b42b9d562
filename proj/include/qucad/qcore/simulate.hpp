// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "qucad/compress/cost_model.hpp"
#include "qucad/qcore/density.hpp"
#include "qucad/qcore/noise.hpp"
#include "qucad/qcore/state.hpp"

namespace qucad::qcore {

StateVector simulate_noiseless(const ParamCircuit& circuit,
                               std::span<const double> theta,
                               const StateVector* init = nullptr);

// Exact density-matrix evolution. Each gate applies its unitary and is then
// charged depolarizing channels per basis-gate occurrence from the cost
// model: n2q two-qubit channels on the gate's pair, then n1q one-qubit
// channels on the target qubit (the channels commute, so the order is only a
// convention).
DensityMatrix simulate_noisy(const ParamCircuit& circuit,
                             std::span<const double> theta,
                             const NoiseModel& noise,
                             const compress::GateCostModel& cost,
                             const DensityMatrix* init = nullptr);

// The channel block charged to one gate at a realized angle. Exposed because
// the depolarizing channel is self-adjoint, so the same routine pulls
// observables back in Heisenberg-picture sweeps.
void apply_gate_noise(DensityMatrix& rho, const Gate& g, double angle,
                      const NoiseModel& noise,
                      const compress::GateCostModel& cost);

// <Z_q> per qubit after pushing the diagonal through each readout confusion
// matrix.
std::vector<double> measure_z_expectations(const DensityMatrix& rho,
                                           const NoiseModel& noise);

// <Z_q> of a pure state (no readout error).
std::vector<double> z_expectations(const StateVector& psi);

}  // namespace qucad::qcore
