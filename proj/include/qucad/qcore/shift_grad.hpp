// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qucad/qcore/simulate.hpp"

namespace qucad::qcore {

// Parameter-shift gradients of the scalar <O> = sum_q w[q] * z_q, where z_q
// is the measured Z expectation of qubit q (confusion-adjusted in the noisy
// variants). Plain rotations use the single-pair rule
//
//   d<O>/dtheta_i = (<O>(theta_i + pi/2) - <O>(theta_i - pi/2)) / 2
//
// Controlled rotations have a zero generator eigenvalue alongside +-1/2, so
// their expectation mixes half- and full-frequency terms; an extra pair at
// +-3pi/2 is combined with the first to stay exact.
//
// `active`, when given, must have length n_params; slots with active[i] == 0
// are skipped and their entry is exactly 0. Channel strengths are charged at
// the unshifted angle, i.e. the shift differentiates the unitary only.
//
// The plain versions evaluate all shifts in one forward pass (cached
// pre-gate states) plus one adjoint observable sweep; the *_direct versions
// re-simulate the whole circuit per shift and exist as a reference.

std::vector<double> shift_gradient_pure(
    const ParamCircuit& circuit, std::span<const double> theta,
    const std::vector<double>& w,
    const std::vector<std::uint8_t>* active = nullptr);

std::vector<double> shift_gradient_noisy(
    const ParamCircuit& circuit, std::span<const double> theta,
    const NoiseModel& noise, const compress::GateCostModel& cost,
    const std::vector<double>& w,
    const std::vector<std::uint8_t>* active = nullptr);

std::vector<double> shift_gradient_pure_direct(
    const ParamCircuit& circuit, std::span<const double> theta,
    const std::vector<double>& w,
    const std::vector<std::uint8_t>* active = nullptr);

std::vector<double> shift_gradient_noisy_direct(
    const ParamCircuit& circuit, std::span<const double> theta,
    const NoiseModel& noise, const compress::GateCostModel& cost,
    const std::vector<double>& w,
    const std::vector<std::uint8_t>* active = nullptr);

}  // namespace qucad::qcore
