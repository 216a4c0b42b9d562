// SPDX-License-Identifier: Apache-2.0
#include "qucad/qnn/train.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "qucad/qcore/shift_grad.hpp"

namespace qucad::qnn {

void TrainConfig::validate() const {
  if (epochs < 0 || batch_size <= 0 || lr < 0.0 || momentum < 0.0 ||
      momentum >= 1.0)
    throw std::invalid_argument("bad training hyperparameters");
  if (noise) noise->validate();
}

namespace {

// Per-sample gradient of the cross-entropy via one adjoint sweep: the chain
// rule collapses the per-qubit shift gradients into a single effective
// observable sum_k coef_k * Z_{readout_k}.
struct SampleGrad {
  std::vector<double> grad;
  double loss = 0.0;
};

SampleGrad sample_gradient(const QnnModel& model,
                           const std::vector<double>& features, int label,
                           const qcore::NoiseModel* noise,
                           const compress::GateCostModel& cost,
                           const std::vector<std::uint8_t>* active) {
  SampleGrad out;
  const std::vector<double> logits = forward(model, features, noise, cost);
  out.loss = loss(logits, label);
  const std::vector<double> coef = loss_grad_logits(logits, label);
  std::vector<double> w(static_cast<size_t>(model.circuit.n_qubits), 0.0);
  for (size_t k = 0; k < model.readout.size(); ++k)
    w[static_cast<size_t>(model.readout[k])] += coef[k];
  const qcore::ParamCircuit c = model.encoded(features);
  out.grad = noise ? qcore::shift_gradient_noisy(c, model.theta, *noise, cost,
                                                 w, active)
                   : qcore::shift_gradient_pure(c, model.theta, w, active);
  return out;
}

std::vector<std::uint8_t> invert_mask(const std::vector<std::uint8_t>& m) {
  std::vector<std::uint8_t> a(m.size());
  for (size_t i = 0; i < m.size(); ++i) a[i] = m[i] ? 0 : 1;
  return a;
}

}  // namespace

std::vector<double> grad_parameter_shift(
    const QnnModel& model, const Dataset& batch,
    const qcore::NoiseModel* noise, const compress::GateCostModel& cost,
    const std::vector<std::uint8_t>* freeze) {
  model.validate();
  batch.validate();
  if (batch.size() == 0) throw std::invalid_argument("empty batch");
  std::vector<std::uint8_t> active;
  if (freeze) {
    if (freeze->size() != model.theta.size())
      throw std::invalid_argument("freeze mask length != n_params");
    active = invert_mask(*freeze);
  }
  std::vector<double> grad(model.theta.size(), 0.0);
  for (size_t i = 0; i < batch.size(); ++i) {
    const SampleGrad sg =
        sample_gradient(model, batch.features[i], batch.labels[i], noise,
                        cost, freeze ? &active : nullptr);
    for (size_t p = 0; p < grad.size(); ++p) grad[p] += sg.grad[p];
  }
  const double inv = 1.0 / static_cast<double>(batch.size());
  for (double& g : grad) g *= inv;
  return grad;
}

TrainResult train(const QnnModel& model, const Dataset& data,
                  const TrainConfig& config, const Dataset* val,
                  const std::vector<std::uint8_t>* freeze) {
  model.validate();
  data.validate();
  config.validate();
  if (data.size() == 0) throw std::invalid_argument("empty training set");
  if (freeze && freeze->size() != model.theta.size())
    throw std::invalid_argument("freeze mask length != n_params");

  const qcore::NoiseModel* noise = config.noise ? &*config.noise : nullptr;
  std::vector<std::uint8_t> active;
  if (freeze) active = invert_mask(*freeze);

  TrainResult result;
  result.model = model;
  QnnModel& m = result.model;
  std::vector<double> velocity(m.theta.size(), 0.0);
  std::vector<double> best_theta = m.theta;
  double best_score = std::numeric_limits<double>::infinity();

  std::mt19937_64 rng(config.seed);
  std::vector<size_t> order(data.size());
  std::iota(order.begin(), order.end(), size_t{0});

  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    std::shuffle(order.begin(), order.end(), rng);
    double epoch_loss = 0.0;
    for (size_t start = 0; start < order.size();
         start += static_cast<size_t>(config.batch_size)) {
      const size_t stop =
          std::min(order.size(), start + static_cast<size_t>(config.batch_size));
      std::vector<double> grad(m.theta.size(), 0.0);
      for (size_t k = start; k < stop; ++k) {
        const size_t i = order[k];
        const SampleGrad sg =
            sample_gradient(m, data.features[i], data.labels[i], noise,
                            config.cost, freeze ? &active : nullptr);
        epoch_loss += sg.loss;
        for (size_t p = 0; p < grad.size(); ++p) grad[p] += sg.grad[p];
      }
      const double inv = 1.0 / static_cast<double>(stop - start);
      for (size_t p = 0; p < m.theta.size(); ++p) {
        if (freeze && (*freeze)[p]) continue;
        velocity[p] = config.momentum * velocity[p] - config.lr * grad[p] * inv;
        m.theta[p] += velocity[p];
      }
    }
    result.loss_trace.push_back(epoch_loss / static_cast<double>(data.size()));

    const double score = val ? mean_loss(m, *val, noise, config.cost)
                             : result.loss_trace.back();
    if (score < best_score) {
      best_score = score;
      best_theta = m.theta;
    }
  }
  if (config.epochs > 0) m.theta = best_theta;
  return result;
}

}  // namespace qucad::qnn
