// SPDX-License-Identifier: Apache-2.0
#include "qucad/compress/admm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qucad/common/angles.hpp"

namespace qucad::compress {

namespace {
constexpr double sentinel_dist = 1e-12;
constexpr double inf = std::numeric_limits<double>::infinity();
}  // namespace

void ThresholdPolicy::validate() const {
  if (kind == Kind::Absolute) {
    if (!std::isfinite(value) || value < 0.0)
      throw std::invalid_argument("absolute threshold must be finite, >= 0");
  } else if (value < 0.0 || value > 1.0) {
    throw std::invalid_argument("masked fraction outside [0,1]");
  }
}

void CompressConfig::validate() const {
  table.validate();
  threshold.validate();
  if (rho <= 0.0) throw std::invalid_argument("rho must be positive");
  if (rounds < 1) throw std::invalid_argument("need >= 1 ADMM round");
  if (inner_epochs < 1 || finetune_epochs < 0)
    throw std::invalid_argument("bad epoch counts");
  inner.validate();
}

void refresh_levels(CompressionState& st, const std::vector<double>& theta,
                    const CompressionTable& table) {
  const size_t n = theta.size();
  st.t_admm.resize(n);
  st.dist.resize(n);
  for (size_t i = 0; i < n; ++i) {
    st.t_admm[i] = table.levels[nearest_level(theta[i], table)];
    st.dist[i] = circular_distance(theta[i], st.t_admm[i]);
  }
}

std::vector<double> priority_table(
    const qcore::ParamCircuit& circuit, const std::vector<double>& dist,
    const calib::CalibrationSnapshot& snapshot) {
  if (static_cast<int>(dist.size()) != circuit.n_params)
    throw std::invalid_argument("dist length != n_params");
  const std::vector<int> owner = circuit.slot_to_gate();
  std::vector<double> p(dist.size());
  for (size_t s = 0; s < dist.size(); ++s) {
    const qcore::Gate& g = circuit.gates[static_cast<size_t>(owner[s])];
    const double err = g.two_qubit()
                           ? snapshot.pair_error(g.q0, g.q1)
                           : snapshot.sq_error[static_cast<size_t>(g.q0)];
    p[s] = dist[s] < sentinel_dist ? inf : err / dist[s];
  }
  return p;
}

std::vector<double> priority_table_agnostic(const std::vector<double>& dist) {
  std::vector<double> p(dist.size());
  for (size_t s = 0; s < dist.size(); ++s)
    p[s] = dist[s] < sentinel_dist ? inf : 1.0 / dist[s];
  return p;
}

double resolve_threshold(const std::vector<double>& priority,
                         const ThresholdPolicy& policy) {
  policy.validate();
  if (policy.kind == ThresholdPolicy::Kind::Absolute) return policy.value;
  const size_t n = priority.size();
  if (n == 0) return 0.0;
  const size_t m = static_cast<size_t>(std::clamp<long long>(
      std::llround(policy.value * static_cast<double>(n)), 0,
      static_cast<long long>(n)));
  if (m == n) return 0.0;  // priorities are >= 0, so everything masks
  std::vector<double> sorted(priority);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (m == 0) {
    // Above every finite priority. Infinite sentinels stay masked: no finite
    // cutoff can release a parameter that already sits on a level.
    const auto first_finite =
        std::find_if(sorted.begin(), sorted.end(),
                     [](double v) { return std::isfinite(v); });
    return first_finite == sorted.end() ? 0.0 : *first_finite + 1.0;
  }
  const double a = sorted[m - 1];  // lowest masked
  const double b = sorted[m];      // highest unmasked
  if (a == b) return a;            // ties mask together
  if (std::isinf(a)) return b + 1.0;
  return 0.5 * (a + b);
}

std::vector<std::uint8_t> make_mask(const std::vector<double>& priority,
                                    double threshold) {
  if (threshold < 0.0) throw std::invalid_argument("negative threshold");
  std::vector<std::uint8_t> mask(priority.size());
  for (size_t i = 0; i < priority.size(); ++i)
    mask[i] = priority[i] < threshold ? 0 : 1;
  return mask;
}

std::vector<double> project_Z(const std::vector<double>& theta_plus_u,
                              const std::vector<std::uint8_t>& mask,
                              const std::vector<double>& t_admm) {
  if (theta_plus_u.size() != mask.size() || mask.size() != t_admm.size())
    throw std::invalid_argument("project_Z length mismatch");
  std::vector<double> z(theta_plus_u.size());
  for (size_t i = 0; i < z.size(); ++i)
    z[i] = mask[i] ? t_admm[i] : theta_plus_u[i];
  return z;
}

qnn::QnnModel finetune(const qnn::QnnModel& model,
                       const std::vector<std::uint8_t>& mask,
                       const qnn::Dataset& data,
                       const qcore::NoiseModel& noise, int epochs,
                       const qnn::TrainConfig& inner) {
  if (mask.size() != model.theta.size())
    throw std::invalid_argument("mask length != n_params");
  if (std::all_of(mask.begin(), mask.end(), [](std::uint8_t m) { return m; }))
    return model;
  qnn::TrainConfig cfg = inner;
  cfg.epochs = epochs;
  cfg.noise = noise;
  return qnn::train(model, data, cfg, nullptr, &mask).model;
}

CompressResult admm_compress(const qnn::QnnModel& model,
                             const qnn::Dataset& data,
                             const calib::CalibrationSnapshot& snapshot,
                             const CompressConfig& config) {
  model.validate();
  data.validate();
  snapshot.validate();
  config.validate();
  if (data.size() == 0) throw std::invalid_argument("empty dataset");
  if (snapshot.n_qubits != model.circuit.n_qubits)
    throw std::invalid_argument("snapshot qubit count != model");

  CompressResult res;
  res.model = model;
  qnn::QnnModel& m = res.model;
  CompressionState& st = res.state;
  const size_t n = m.theta.size();
  st.rho = config.rho;
  st.z = m.theta;
  st.u.assign(n, 0.0);

  std::vector<size_t> order(data.size());
  std::iota(order.begin(), order.end(), size_t{0});

  for (int round = 1; round <= config.rounds; ++round) {
    st.round = round;
    refresh_levels(st, m.theta, config.table);
    st.priority = config.priority == PriorityMode::NoiseAware
                      ? priority_table(m.circuit, st.dist, snapshot)
                      : priority_table_agnostic(st.dist);
    st.mask = make_mask(st.priority,
                        resolve_threshold(st.priority, config.threshold));

    // theta-update: SGD on noiseless loss + (rho/2)||theta - z + u||^2.
    std::mt19937_64 rng(config.inner.seed + static_cast<std::uint64_t>(round));
    std::vector<double> velocity(n, 0.0);
    for (int epoch = 0; epoch < config.inner_epochs; ++epoch) {
      std::shuffle(order.begin(), order.end(), rng);
      const size_t bs = static_cast<size_t>(config.inner.batch_size);
      for (size_t start = 0; start < order.size(); start += bs) {
        const size_t stop = std::min(order.size(), start + bs);
        qnn::Dataset batch;
        batch.n_classes = data.n_classes;
        for (size_t k = start; k < stop; ++k) {
          batch.features.push_back(data.features[order[k]]);
          batch.labels.push_back(data.labels[order[k]]);
        }
        std::vector<double> grad =
            qnn::grad_parameter_shift(m, batch, nullptr, config.inner.cost);
        for (size_t i = 0; i < n; ++i) {
          grad[i] += config.rho * (m.theta[i] - st.z[i] + st.u[i]);
          velocity[i] =
              config.inner.momentum * velocity[i] - config.inner.lr * grad[i];
          m.theta[i] += velocity[i];
        }
      }
    }

    std::vector<double> theta_plus_u(n);
    for (size_t i = 0; i < n; ++i) theta_plus_u[i] = m.theta[i] + st.u[i];
    st.z = project_Z(theta_plus_u, st.mask, st.t_admm);
    for (size_t i = 0; i < n; ++i) st.u[i] += m.theta[i] - st.z[i];
  }

  // Constraint satisfaction regardless of residual ||theta - z||.
  for (size_t i = 0; i < n; ++i)
    m.theta[i] = st.mask[i] ? st.t_admm[i] : wrap_angle(m.theta[i]);

  m = finetune(m, st.mask, data, calib::build_noise_model(snapshot),
               config.finetune_epochs, config.inner);
  res.mask = st.mask;
  return res;
}

GateCost compressed_cost(const qcore::ParamCircuit& circuit,
                         const std::vector<double>& theta,
                         const std::vector<std::uint8_t>& mask,
                         const CompressionTable& table,
                         const GateCostModel& cost) {
  table.validate();
  if (static_cast<int>(theta.size()) != circuit.n_params ||
      mask.size() != theta.size())
    throw std::invalid_argument("theta/mask length != n_params");
  GateCost total;
  for (const qcore::Gate& g : circuit.gates) {
    if (g.parameterized())
      total += cost.cost_of(g.kind, theta[static_cast<size_t>(g.slot)]);
    else
      total += cost.generic(g.kind);
  }
  return total;
}

}  // namespace qucad::compress
