// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>

#include "qucad/calib/calibration.hpp"

namespace qucad::calib {

// Synthetic multi-day calibration series: per-channel random walks with an
// optional deterministic trend, plus transient additive spikes that hold for
// a few days and vanish. All emitted rates are clipped to [1e-5, 0.5].
struct DriftConfig {
  int n_days = 60;
  int n_qubits = 4;
  qcore::Coupling coupling;  // empty = ring over n_qubits

  double base_sq = 0.002, base_tq = 0.015, base_ro = 0.02;
  double walk_sq = 0.0005, walk_tq = 0.004, walk_ro = 0.004;  // step sigma
  double trend_sq = 0.0, trend_tq = 0.0, trend_ro = 0.0;      // per day

  double spike_prob = 0.1;  // chance a new spike starts each day
  double spike_min = 0.05, spike_max = 0.3;
  int spike_days_min = 2, spike_days_max = 6;
  bool spike_tq = true, spike_sq = false, spike_ro = false;
  int pinned_pair = -1;  // index into the sorted pair list; -1 = uniform

  std::uint64_t seed = 1234;
  std::string date_prefix = "day-";

  void validate() const;
};

std::vector<CalibrationSnapshot> synth_timeseries(const DriftConfig& cfg);

}  // namespace qucad::calib
