// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qucad/qnn/model.hpp"

namespace qucad::qnn {

// Minibatch SGD with momentum. When `noise` is set the forward passes and
// gradients run on the noisy simulator (noise-injection training).
struct TrainConfig {
  int epochs = 30;
  int batch_size = 16;
  double lr = 0.05;
  double momentum = 0.9;
  std::uint64_t seed = 0;
  std::optional<qcore::NoiseModel> noise;
  compress::GateCostModel cost = compress::GateCostModel::standard();

  void validate() const;
};

// Mean cross-entropy gradient over the batch by the parameter-shift rule,
// chained through softmax. freeze (optional, 1 = frozen) pins entries of the
// result to exactly 0.
std::vector<double> grad_parameter_shift(
    const QnnModel& model, const Dataset& batch,
    const qcore::NoiseModel* noise, const compress::GateCostModel& cost,
    const std::vector<std::uint8_t>* freeze = nullptr);

struct TrainResult {
  QnnModel model;
  std::vector<double> loss_trace;  // mean training loss per epoch
};

// Returns the parameters of the epoch with the best validation loss (or best
// training loss when no validation set is supplied). Frozen parameters are
// never touched.
TrainResult train(const QnnModel& model, const Dataset& data,
                  const TrainConfig& config, const Dataset* val = nullptr,
                  const std::vector<std::uint8_t>* freeze = nullptr);

}  // namespace qucad::qnn
