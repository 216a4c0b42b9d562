// SPDX-License-Identifier: Apache-2.0
#include "qucad/repo/repository.hpp"

#include <limits>
#include <stdexcept>

namespace qucad::repo {

Repository build_repository(const qnn::QnnModel& base,
                            const std::vector<HistoryDay>& history,
                            const qnn::Dataset& train, int k,
                            double acc_requirement,
                            const compress::CompressConfig& compress_cfg,
                            std::uint64_t seed) {
  base.validate();
  if (history.size() < 2)
    throw std::invalid_argument("repository needs >= 2 history days");
  auto schema = std::make_shared<calib::CalibrationSchema>(
      calib::CalibrationSchema::from_snapshot(history.front().snapshot));

  std::vector<calib::CalibrationVector> days;
  std::vector<double> acc;
  days.reserve(history.size());
  for (const HistoryDay& h : history) {
    days.push_back(calib::vectorize(h.snapshot, schema));
    acc.push_back(h.accuracy);
  }

  const ClusterModel clusters = weighted_kmeans(days, acc, k, seed);

  Repository repo;
  repo.schema = schema;
  repo.weights = clusters.weights;
  repo.acc_requirement = acc_requirement;

  for (int c = 0; c < k; ++c) {
    // Snap the median centroid to the nearest member day, so the entry is
    // backed by an actual observed snapshot.
    size_t snap_day = 0;
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < days.size(); ++i) {
      if (clusters.assignment[i] != c) continue;
      const double d = weighted_distance(
          days[i], clusters.centroids[static_cast<size_t>(c)], repo.weights);
      if (d < best) {
        best = d;
        snap_day = i;
      }
    }
    if (!std::isfinite(best))
      throw std::invalid_argument("cluster with no members");

    RepoEntry entry;
    entry.centroid = days[snap_day];
    entry.snapshot = history[snap_day].snapshot;
    const compress::CompressResult cr = compress::admm_compress(
        base, train, entry.snapshot, compress_cfg);
    entry.model = cr.model;
    entry.mask = cr.mask;

    double mean_acc = 0.0, mean_dist = 0.0;
    int members = 0;
    for (size_t i = 0; i < days.size(); ++i) {
      if (clusters.assignment[i] != c) continue;
      mean_acc += acc[i];
      mean_dist += weighted_distance(days[i], entry.centroid, repo.weights);
      ++members;
    }
    entry.mean_acc = mean_acc / members;
    entry.mean_dist = mean_dist / members;
    entry.invalid = entry.mean_acc < acc_requirement;
    entry.source = RepoEntry::Source::Offline;
    entry.id = "offline-" + std::to_string(c);
    repo.th_w = std::max(repo.th_w, entry.mean_dist);
    repo.entries.push_back(std::move(entry));
  }
  return repo;
}

namespace {

void check_context(const MatchContext& ctx) {
  if (!ctx.base_model || !ctx.train || !ctx.val || !ctx.snapshot ||
      !ctx.compress_cfg)
    throw std::invalid_argument("incomplete match context");
}

}  // namespace

int compress_and_append(Repository& repo,
                        const calib::CalibrationVector& today,
                        const MatchContext& ctx) {
  check_context(ctx);
  if (repo.weights.size() != today.values.size())
    throw std::invalid_argument("today's vector does not fit repo weights");
  RepoEntry entry;
  entry.centroid = today;
  entry.snapshot = *ctx.snapshot;
  const compress::CompressResult cr = compress::admm_compress(
      *ctx.base_model, *ctx.train, *ctx.snapshot, *ctx.compress_cfg);
  entry.model = cr.model;
  entry.mask = cr.mask;
  const qcore::NoiseModel nm = calib::build_noise_model(*ctx.snapshot);
  entry.mean_acc = qnn::evaluate_accuracy(entry.model, *ctx.val, &nm,
                                          ctx.compress_cfg->inner.cost);
  entry.mean_dist = 0.0;
  entry.invalid = entry.mean_acc < repo.acc_requirement;
  entry.source = RepoEntry::Source::Online;
  entry.id = "online-" + entry.snapshot.date;
  repo.entries.push_back(std::move(entry));
  return static_cast<int>(repo.entries.size()) - 1;
}

OnlineDecision match_online(Repository& repo,
                            const calib::CalibrationVector& today,
                            const MatchContext& ctx) {
  check_context(ctx);
  if (repo.entries.empty())
    throw std::invalid_argument("match_online on an empty repository");
  if (repo.weights.size() != today.values.size())
    throw std::invalid_argument("today's vector does not fit repo weights");

  size_t best = 0;
  double best_d =
      weighted_distance(today, repo.entries[0].centroid, repo.weights);
  for (size_t j = 1; j < repo.entries.size(); ++j) {
    const double d =
        weighted_distance(today, repo.entries[j].centroid, repo.weights);
    if (d < best_d) {
      best = j;
      best_d = d;
    }
  }

  OnlineDecision decision;
  decision.matched_distance = best_d;
  if (best_d > repo.th_w) {
    decision.kind = DecisionKind::CompressNew;
    decision.entry_index = compress_and_append(repo, today, ctx);
  } else if (repo.entries[best].invalid) {
    decision.kind = DecisionKind::Fail;
    decision.entry_index = static_cast<int>(best);
    decision.report = "matched cluster " + repo.entries[best].id +
                      " is invalid (mean accuracy " +
                      std::to_string(repo.entries[best].mean_acc) +
                      " < required " + std::to_string(repo.acc_requirement) +
                      ")";
  } else {
    decision.kind = DecisionKind::Reuse;
    decision.entry_index = static_cast<int>(best);
  }
  return decision;
}

}  // namespace qucad::repo
