// SPDX-License-Identifier: Apache-2.0
#include "qucad/qcore/shift_grad.hpp"

#include <numbers>
#include <stdexcept>

namespace qucad::qcore {

namespace {

constexpr double half_pi = 0.5 * std::numbers::pi;

// Exact shift rule per gate family, given the expectation at a shifted
// angle. A plain rotation's generator has eigenvalues {+1/2, -1/2}, so the
// expectation is a single-frequency trigonometric polynomial and one
// +-pi/2 pair suffices. A controlled rotation adds eigenvalue 0, which
// introduces half-frequency terms; a second pair at +-3pi/2 isolates and
// cancels them (the two pairs see the half- and full-frequency parts with
// different gains, so the exact derivative is a fixed linear combination).
template <typename Eval>
double shift_rule(const Gate& g, Eval&& eval) {
  const double d1 = 0.5 * (eval(half_pi) - eval(-half_pi));
  if (!g.two_qubit()) return d1;
  const double d2 = 0.5 * (eval(3.0 * half_pi) - eval(-3.0 * half_pi));
  constexpr double inv_two_rt2 = 0.35355339059327379;  // 1 / (2*sqrt(2))
  return (d1 + d2) * inv_two_rt2 + 0.5 * (d1 - d2);
}

void check_args(const ParamCircuit& circuit, std::span<const double> theta,
                const std::vector<double>& w,
                const std::vector<std::uint8_t>* active) {
  circuit.validate();
  if (theta.size() < static_cast<size_t>(circuit.n_params))
    throw std::invalid_argument("theta shorter than n_params");
  if (static_cast<int>(w.size()) != circuit.n_qubits)
    throw std::invalid_argument("observable weights length != n_qubits");
  if (active && static_cast<int>(active->size()) != circuit.n_params)
    throw std::invalid_argument("active mask length != n_params");
}

bool slot_active(const std::vector<std::uint8_t>* active, int slot) {
  return !active || (*active)[static_cast<size_t>(slot)] != 0;
}

// Confusion-adjusted observable weights: measured z = offset + scale * true
// z, and offsets cancel inside the shift difference.
std::vector<double> scaled_weights(const std::vector<double>& w,
                                   const NoiseModel& noise) {
  std::vector<double> s(w.size());
  for (size_t q = 0; q < w.size(); ++q)
    s[q] = w[q] * noise.readout[q].scale();
  return s;
}

// <phi| O |phi> for Hermitian O in DensityMatrix layout.
double expectation(const DensityMatrix& o, const StateVector& phi) {
  const size_t d = phi.amp.size();
  double val = 0.0;
  for (size_t r = 0; r < d; ++r) {
    c64 y{0.0, 0.0};
    const c64* row = o.elem.data() + r * d;
    for (size_t c = 0; c < d; ++c) y += row[c] * phi.amp[c];
    const c64 t = std::conj(phi.amp[r]) * y;
    val += t.real();
  }
  return val;
}

}  // namespace

std::vector<double> shift_gradient_pure(
    const ParamCircuit& circuit, std::span<const double> theta,
    const std::vector<double>& w, const std::vector<std::uint8_t>* active) {
  check_args(circuit, theta, w, active);
  const size_t m = circuit.gates.size();

  std::vector<StateVector> pre(m);
  StateVector psi = StateVector::zero_state(circuit.n_qubits);
  for (size_t i = 0; i < m; ++i) {
    pre[i] = psi;
    apply_gate_state(psi, circuit.gates[i], circuit.angle_of(circuit.gates[i], theta));
  }

  std::vector<double> grad(static_cast<size_t>(circuit.n_params), 0.0);
  DensityMatrix obs = weighted_z_observable(circuit.n_qubits, w);
  StateVector phi;
  for (size_t i = m; i-- > 0;) {
    const Gate& g = circuit.gates[i];
    const double angle = circuit.angle_of(g, theta);
    if (g.parameterized() && slot_active(active, g.slot)) {
      grad[static_cast<size_t>(g.slot)] = shift_rule(g, [&](double delta) {
        phi = pre[i];
        apply_gate_state(phi, g, angle + delta);
        return expectation(obs, phi);
      });
    }
    apply_gate_adjoint(obs, g, angle);
  }
  return grad;
}

std::vector<double> shift_gradient_noisy(
    const ParamCircuit& circuit, std::span<const double> theta,
    const NoiseModel& noise, const compress::GateCostModel& cost,
    const std::vector<double>& w, const std::vector<std::uint8_t>* active) {
  check_args(circuit, theta, w, active);
  noise.validate();
  if (noise.n_qubits != circuit.n_qubits)
    throw std::invalid_argument("noise model size != circuit size");
  const size_t m = circuit.gates.size();

  std::vector<DensityMatrix> pre(m);
  DensityMatrix rho = DensityMatrix::zero_state(circuit.n_qubits);
  for (size_t i = 0; i < m; ++i) {
    pre[i] = rho;
    const Gate& g = circuit.gates[i];
    const double angle = circuit.angle_of(g, theta);
    apply_gate_density(rho, g, angle);
    apply_gate_noise(rho, g, angle, noise, cost);
  }

  std::vector<double> grad(static_cast<size_t>(circuit.n_params), 0.0);
  DensityMatrix obs =
      weighted_z_observable(circuit.n_qubits, scaled_weights(w, noise));
  DensityMatrix sigma;
  for (size_t i = m; i-- > 0;) {
    const Gate& g = circuit.gates[i];
    const double angle = circuit.angle_of(g, theta);
    // Channel block is self-adjoint: the same call pulls obs back through
    // the noise charged to this gate.
    apply_gate_noise(obs, g, angle, noise, cost);
    if (g.parameterized() && slot_active(active, g.slot)) {
      grad[static_cast<size_t>(g.slot)] = shift_rule(g, [&](double delta) {
        sigma = pre[i];
        apply_gate_density(sigma, g, angle + delta);
        return trace_product(obs, sigma);
      });
    }
    apply_gate_adjoint(obs, g, angle);
  }
  return grad;
}

std::vector<double> shift_gradient_pure_direct(
    const ParamCircuit& circuit, std::span<const double> theta,
    const std::vector<double>& w, const std::vector<std::uint8_t>* active) {
  check_args(circuit, theta, w, active);
  const std::vector<int> owner = circuit.slot_to_gate();
  std::vector<double> grad(static_cast<size_t>(circuit.n_params), 0.0);
  std::vector<double> shifted(theta.begin(), theta.end());
  for (int p = 0; p < circuit.n_params; ++p) {
    if (!slot_active(active, p)) continue;
    const Gate& g = circuit.gates[static_cast<size_t>(owner[static_cast<size_t>(p)])];
    grad[static_cast<size_t>(p)] = shift_rule(g, [&](double delta) {
      shifted[static_cast<size_t>(p)] = theta[static_cast<size_t>(p)] + delta;
      const StateVector psi = simulate_noiseless(circuit, shifted);
      const std::vector<double> z = z_expectations(psi);
      double v = 0.0;
      for (size_t q = 0; q < w.size(); ++q) v += w[q] * z[q];
      return v;
    });
    shifted[static_cast<size_t>(p)] = theta[static_cast<size_t>(p)];
  }
  return grad;
}

std::vector<double> shift_gradient_noisy_direct(
    const ParamCircuit& circuit, std::span<const double> theta,
    const NoiseModel& noise, const compress::GateCostModel& cost,
    const std::vector<double>& w, const std::vector<std::uint8_t>* active) {
  check_args(circuit, theta, w, active);
  noise.validate();
  const std::vector<int> owner = circuit.slot_to_gate();
  std::vector<double> grad(static_cast<size_t>(circuit.n_params), 0.0);
  for (int p = 0; p < circuit.n_params; ++p) {
    if (!slot_active(active, p)) continue;
    const Gate& owner_gate =
        circuit.gates[static_cast<size_t>(owner[static_cast<size_t>(p)])];
    grad[static_cast<size_t>(p)] = shift_rule(owner_gate, [&](double delta) {
      DensityMatrix rho = DensityMatrix::zero_state(circuit.n_qubits);
      for (size_t gi = 0; gi < circuit.gates.size(); ++gi) {
        const Gate& g = circuit.gates[gi];
        const double angle = circuit.angle_of(g, theta);
        const bool hit = static_cast<int>(gi) == owner[static_cast<size_t>(p)];
        apply_gate_density(rho, g, hit ? angle + delta : angle);
        // Noise stays charged at the unshifted angle.
        apply_gate_noise(rho, g, angle, noise, cost);
      }
      const std::vector<double> z = measure_z_expectations(rho, noise);
      double v = 0.0;
      for (size_t q = 0; q < w.size(); ++q) v += w[q] * z[q];
      return v;
    });
  }
  return grad;
}

}  // namespace qucad::qcore
