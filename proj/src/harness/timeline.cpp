// SPDX-License-Identifier: Apache-2.0
#include "qucad/harness/timeline.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <memory>
#include <stdexcept>

namespace qucad::harness {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream per (master seed, day, purpose).
std::uint64_t sub_seed(std::uint64_t master, int day, int purpose) {
  return splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(day) * 0x100000001b3ULL +
                                        static_cast<std::uint64_t>(purpose)));
}

const char* decision_name(repo::DecisionKind k) {
  switch (k) {
    case repo::DecisionKind::Reuse:
      return "reuse";
    case repo::DecisionKind::CompressNew:
      return "compress-new";
    case repo::DecisionKind::Fail:
      return "fail";
  }
  return "?";
}

}  // namespace

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::Baseline:
      return "Baseline";
    case Strategy::NoiseAwareTrainOnce:
      return "NoiseAwareTrainOnce";
    case Strategy::NoiseAwareTrainEveryday:
      return "NoiseAwareTrainEveryday";
    case Strategy::OneTimeCompression:
      return "OneTimeCompression";
    case Strategy::QuCADNoOffline:
      return "QuCADNoOffline";
    case Strategy::QuCAD:
      return "QuCAD";
    case Strategy::CompressEveryday:
      return "CompressEveryday";
  }
  return "?";
}

Strategy strategy_from_string(const std::string& name) {
  for (Strategy s : all_strategies()) {
    if (name == to_string(s)) return s;
  }
  // Accept the lowercase CLI spellings too.
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (Strategy s : all_strategies()) {
    std::string cand = to_string(s);
    std::transform(cand.begin(), cand.end(), cand.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    if (lower == cand) return s;
  }
  throw std::invalid_argument("unknown strategy: " + name);
}

std::vector<Strategy> all_strategies() {
  return {Strategy::Baseline,          Strategy::NoiseAwareTrainOnce,
          Strategy::NoiseAwareTrainEveryday, Strategy::OneTimeCompression,
          Strategy::QuCADNoOffline,    Strategy::QuCAD,
          Strategy::CompressEveryday};
}

TimelineResult run_timeline(Strategy strategy, const TimelineData& data,
                            const TimelineConfig& config) {
  if (data.online.empty())
    throw std::invalid_argument("run_timeline: no online days");
  data.base.validate();
  config.online_train.validate();
  config.compress.validate();
  if (config.repo_k < 1)
    throw std::invalid_argument("run_timeline: repo_k must be >= 1");

  const compress::GateCostModel& cost = config.online_train.cost;

  TimelineResult result;
  result.strategy = strategy;
  result.days.reserve(data.online.size());

  // State shared across days.
  qnn::QnnModel current = data.base;  // whatever gets evaluated today
  repo::Repository repo;

  if (strategy == Strategy::QuCAD) {
    if (data.offline.size() < 2)
      throw std::invalid_argument("QuCAD needs at least two offline days");
    auto t0 = Clock::now();
    std::vector<repo::HistoryDay> history;
    history.reserve(data.offline.size());
    for (const auto& snap : data.offline) {
      qcore::NoiseModel noise = calib::build_noise_model(snap);
      history.push_back(
          {snap, qnn::evaluate_accuracy(data.base, data.val, &noise, cost)});
    }
    compress::CompressConfig cc = config.compress;
    cc.inner.seed = sub_seed(config.seed, -1, 0);
    int k = std::min<int>(config.repo_k, static_cast<int>(history.size()));
    repo = repo::build_repository(data.base, history, data.train, k,
                                  config.acc_requirement, cc, config.seed);
    result.offline_wall_seconds = seconds_since(t0);
  } else if (strategy == Strategy::QuCADNoOffline) {
    // No offline model building: an empty repository, uniform weights, and a
    // matching radius taken from a model-free clustering of the offline
    // calibration vectors alone.
    auto t0 = Clock::now();
    auto schema = std::make_shared<const calib::CalibrationSchema>(
        calib::CalibrationSchema::from_snapshot(
            data.offline.empty() ? data.online.front() : data.offline.front()));
    repo.schema = schema;
    repo.acc_requirement = config.acc_requirement;
    repo.weights.assign(schema->dim(), 1.0);
    repo.th_w = 0.0;
    if (!data.offline.empty()) {
      std::vector<calib::CalibrationVector> days;
      days.reserve(data.offline.size());
      for (const auto& snap : data.offline)
        days.push_back(calib::vectorize(snap, schema));
      int k = std::min<int>(config.repo_k, static_cast<int>(days.size()));
      repo::ClusterModel cm =
          repo::kmedians(days, repo.weights, k, config.seed);
      for (double d : cm.mean_distance) repo.th_w = std::max(repo.th_w, d);
    }
    result.offline_wall_seconds = seconds_since(t0);
  }

  for (int day = 0; day < static_cast<int>(data.online.size()); ++day) {
    const calib::CalibrationSnapshot& snap = data.online[day];
    qcore::NoiseModel noise = calib::build_noise_model(snap);

    DayRecord rec;
    rec.date = snap.date;
    auto t0 = Clock::now();

    switch (strategy) {
      case Strategy::Baseline:
        rec.decision = "hold";
        break;

      case Strategy::NoiseAwareTrainOnce:
        if (day == 0) {
          qnn::TrainConfig tc = config.online_train;
          tc.noise = noise;
          tc.seed = sub_seed(config.seed, day, 1);
          current = qnn::train(data.base, data.train, tc, &data.val).model;
          rec.decision = "train";
          rec.optimizations = 1;
        } else {
          rec.decision = "hold";
        }
        break;

      case Strategy::NoiseAwareTrainEveryday: {
        qnn::TrainConfig tc = config.online_train;
        tc.noise = noise;
        tc.seed = sub_seed(config.seed, day, 1);
        current = qnn::train(data.base, data.train, tc, &data.val).model;
        rec.decision = "train";
        rec.optimizations = 1;
        break;
      }

      case Strategy::OneTimeCompression:
        if (day == 0) {
          compress::CompressConfig cc = config.compress;
          cc.priority = compress::PriorityMode::NoiseAgnostic;
          cc.inner.seed = sub_seed(config.seed, day, 2);
          current =
              compress::admm_compress(data.base, data.train, snap, cc).model;
          rec.decision = "compress";
          rec.optimizations = 1;
        } else {
          rec.decision = "hold";
        }
        break;

      case Strategy::CompressEveryday: {
        compress::CompressConfig cc = config.compress;
        cc.inner.seed = sub_seed(config.seed, day, 2);
        current =
            compress::admm_compress(data.base, data.train, snap, cc).model;
        rec.decision = "compress";
        rec.optimizations = 1;
        break;
      }

      case Strategy::QuCAD:
      case Strategy::QuCADNoOffline: {
        compress::CompressConfig cc = config.compress;
        cc.inner.seed = sub_seed(config.seed, day, 2);
        repo::MatchContext ctx;
        ctx.base_model = &data.base;
        ctx.train = &data.train;
        ctx.val = &data.val;
        ctx.snapshot = &snap;
        ctx.compress_cfg = &cc;
        calib::CalibrationVector today = calib::vectorize(snap, repo.schema);
        if (repo.entries.empty()) {
          int idx = repo::compress_and_append(repo, today, ctx);
          current = repo.entries[idx].model;
          rec.decision = decision_name(repo::DecisionKind::CompressNew);
          rec.optimizations = 1;
        } else {
          repo::OnlineDecision dec = repo::match_online(repo, today, ctx);
          current = repo.entries[dec.entry_index].model;
          rec.decision = decision_name(dec.kind);
          rec.optimizations = dec.kind == repo::DecisionKind::CompressNew;
        }
        break;
      }
    }

    rec.wall_seconds = seconds_since(t0);
    rec.accuracy = qnn::evaluate_accuracy(current, data.test, &noise, cost);
    result.total_optimizations += rec.optimizations;
    result.total_wall_seconds += rec.wall_seconds;
    result.days.push_back(std::move(rec));
  }

  return result;
}

SummaryRow summarize(const TimelineResult& result,
                     const std::vector<double>& thresholds,
                     const TimelineResult& baseline) {
  if (result.days.size() != baseline.days.size())
    throw std::invalid_argument("summarize: timelines cover different days");
  auto stats = [&](const TimelineResult& r, double& mean, double& var,
                   std::vector<int>& over) {
    mean = 0.0;
    for (const auto& d : r.days) mean += d.accuracy;
    mean /= static_cast<double>(r.days.size());
    var = 0.0;
    for (const auto& d : r.days) {
      double e = d.accuracy - mean;
      var += e * e;
    }
    var /= static_cast<double>(r.days.size());
    over.assign(thresholds.size(), 0);
    for (const auto& d : r.days)
      for (size_t t = 0; t < thresholds.size(); ++t)
        if (d.accuracy > thresholds[t]) ++over[t];
  };

  SummaryRow row;
  row.strategy = to_string(result.strategy);
  stats(result, row.mean_acc, row.variance, row.days_over);
  double base_mean, base_var;
  std::vector<int> base_over;
  stats(baseline, base_mean, base_var, base_over);
  row.delta_mean = row.mean_acc - base_mean;
  row.delta_days_over.resize(thresholds.size());
  for (size_t t = 0; t < thresholds.size(); ++t)
    row.delta_days_over[t] = row.days_over[t] - base_over[t];
  row.total_optimizations = result.total_optimizations;
  row.total_wall_seconds = result.total_wall_seconds;
  return row;
}

}  // namespace qucad::harness
