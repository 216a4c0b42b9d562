// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "qucad/calib/drift.hpp"
#include "qucad/repo/repository.hpp"

namespace qucad::harness {

enum class Strategy {
  Baseline,              // day-0 noiseless model, never touched
  NoiseAwareTrainOnce,   // noise-injection training on day 1 only
  NoiseAwareTrainEveryday,
  OneTimeCompression,    // noise-agnostic compression on day 1 only
  QuCADNoOffline,        // manager starting from an empty repository
  QuCAD,                 // offline repository + online manager
  CompressEveryday,      // noise-aware compression per day: upper bound
};

const char* to_string(Strategy s);
Strategy strategy_from_string(const std::string& name);
std::vector<Strategy> all_strategies();

struct DayRecord {
  std::string date;
  double accuracy = 0.0;   // test split under the day's noise
  std::string decision;    // reuse / compress-new / fail / train / compress
  int optimizations = 0;   // model-updating operations this day
  double wall_seconds = 0.0;
};

struct TimelineResult {
  Strategy strategy = Strategy::Baseline;
  std::vector<DayRecord> days;
  int total_optimizations = 0;
  double total_wall_seconds = 0.0;    // online phase
  double offline_wall_seconds = 0.0;  // repository construction
};

struct TimelineConfig {
  qnn::TrainConfig online_train;      // per-day training budget
  compress::CompressConfig compress;  // shared by all compressing strategies
  int repo_k = 6;
  double acc_requirement = 0.5;
  std::uint64_t seed = 7;
};

struct TimelineData {
  qnn::QnnModel base;  // noiseless-trained starting model
  qnn::Dataset train, val, test;
  std::vector<calib::CalibrationSnapshot> offline;
  std::vector<calib::CalibrationSnapshot> online;
};

// Runs one strategy over every online day. Each day evaluates the strategy's
// current model on the test split under that day's noise; decisions and
// training use the validation split so reported accuracy stays untouched.
// Per-day work is seeded from config.seed and the day index, so strategies
// are reproducible in isolation.
TimelineResult run_timeline(Strategy strategy, const TimelineData& data,
                            const TimelineConfig& config);

struct SummaryRow {
  std::string strategy;
  double mean_acc = 0.0;
  double variance = 0.0;  // population variance
  std::vector<int> days_over;  // strict >, one per threshold
  double delta_mean = 0.0;
  std::vector<int> delta_days_over;
  int total_optimizations = 0;
  double total_wall_seconds = 0.0;
};

SummaryRow summarize(const TimelineResult& result,
                     const std::vector<double>& thresholds,
                     const TimelineResult& baseline);

}  // namespace qucad::harness
