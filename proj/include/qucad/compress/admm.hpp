// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "qucad/calib/calibration.hpp"
#include "qucad/compress/table.hpp"
#include "qucad/qnn/train.hpp"

namespace qucad::compress {

// Parameters are ranked for compression by p_i = error(gate_i) / d_i where
// d_i is the circular distance of theta_i to its nearest table level. High
// priority (noisy gate and/or already near a level) means the parameter gets
// frozen at that level: mask_i = 1.
enum class PriorityMode { NoiseAware, NoiseAgnostic };

struct ThresholdPolicy {
  enum class Kind { Absolute, MaskedFraction };
  Kind kind = Kind::MaskedFraction;
  double value = 0.5;  // absolute priority cutoff, or target masked fraction

  void validate() const;
};

struct CompressConfig {
  CompressionTable table = CompressionTable::quarter_turns();
  double rho = 0.01;     // ADMM penalty weight
  int rounds = 5;        // alternating-update rounds
  int inner_epochs = 5;  // gradient epochs per theta-update
  ThresholdPolicy threshold;
  PriorityMode priority = PriorityMode::NoiseAware;
  int finetune_epochs = 5;
  qnn::TrainConfig inner;  // lr / batch / momentum / seed for the updates

  void validate() const;
};

// Per-round working vectors, all length n_params.
struct CompressionState {
  std::vector<double> t_admm;        // nearest level value
  std::vector<double> dist;          // circular distance to it
  std::vector<double> priority;      // +inf sentinel when dist < 1e-12
  std::vector<std::uint8_t> mask;    // 1 = frozen at t_admm
  std::vector<double> z, u;
  double rho = 0.0;
  int round = 0;
};

void refresh_levels(CompressionState& st, const std::vector<double>& theta,
                    const CompressionTable& table);

// error(gate) / dist per parameter: sq_error of the gate's qubit for 1q
// rotations, tq_error of its pair for controlled rotations.
std::vector<double> priority_table(const qcore::ParamCircuit& circuit,
                                   const std::vector<double>& dist,
                                   const calib::CalibrationSnapshot& snapshot);

// 1 / dist (the noise term dropped), for the noise-agnostic baseline.
std::vector<double> priority_table_agnostic(const std::vector<double>& dist);

// Absolute cutoff for the given policy. MaskedFraction sorts priorities
// descending and splits between ranks m-1 and m (m = round(fraction * n)).
double resolve_threshold(const std::vector<double>& priority,
                         const ThresholdPolicy& policy);

// mask_i = 0 if p_i < threshold else 1.
std::vector<std::uint8_t> make_mask(const std::vector<double>& priority,
                                    double threshold);

// z_i = t_admm_i where mask_i = 1, theta_plus_u_i elsewhere.
std::vector<double> project_Z(const std::vector<double>& theta_plus_u,
                              const std::vector<std::uint8_t>& mask,
                              const std::vector<double>& t_admm);

// Noise-injection training of the unfrozen parameters only; frozen entries
// are bit-identical on return. Returns the input unchanged when everything
// is frozen.
qnn::QnnModel finetune(const qnn::QnnModel& model,
                       const std::vector<std::uint8_t>& mask,
                       const qnn::Dataset& data,
                       const qcore::NoiseModel& noise, int epochs,
                       const qnn::TrainConfig& inner = {});

struct CompressResult {
  qnn::QnnModel model;
  std::vector<std::uint8_t> mask;
  CompressionState state;
};

// Alternating rounds of {refresh levels/priorities/mask; gradient descent on
// the noiseless loss + (rho/2)||theta - z + u||^2; z projection; dual
// update}, then hard assignment of masked parameters to their levels and a
// noise-injection fine-tune under the snapshot's noise model.
CompressResult admm_compress(const qnn::QnnModel& model,
                             const qnn::Dataset& data,
                             const calib::CalibrationSnapshot& snapshot,
                             const CompressConfig& config);

// Static basis-gate counts of the circuit at the given parameter values.
// Parameterized rotations use the cost model's angle overrides (so levels
// price in); fixed gates are charged their generic cost. `mask` is validated
// for length only.
GateCost compressed_cost(const qcore::ParamCircuit& circuit,
                         const std::vector<double>& theta,
                         const std::vector<std::uint8_t>& mask,
                         const CompressionTable& table,
                         const GateCostModel& cost);

}  // namespace qucad::compress
