// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "qucad/compress/admm.hpp"
#include "qucad/repo/cluster.hpp"

namespace qucad::repo {

struct RepoEntry {
  enum class Source { Offline, Online };

  calib::CalibrationVector centroid;
  calib::CalibrationSnapshot snapshot;  // the realizable day behind it
  qnn::QnnModel model;
  std::vector<std::uint8_t> mask;
  double mean_acc = 0.0;
  double mean_dist = 0.0;  // mean member distance (0 for online singletons)
  bool invalid = false;    // mean_acc < acc_requirement
  Source source = Source::Offline;
  std::string id;
};

struct Repository {
  WeightVector weights;
  double th_w = 0.0;  // max over offline clusters of mean weighted distance
  double acc_requirement = 0.5;
  std::vector<RepoEntry> entries;
  std::shared_ptr<const calib::CalibrationSchema> schema;
};

struct HistoryDay {
  calib::CalibrationSnapshot snapshot;
  double accuracy;  // of the base model under this day's noise
};

// Offline pipeline: correlation weights, weighted k-medians, snap each
// centroid to its nearest member day, compress the base model under that
// day's snapshot, record per-cluster mean accuracy / mean distance (against
// the snapped centroid), th_w = max mean distance, invalid where the mean
// accuracy misses `acc_requirement`.
Repository build_repository(const qnn::QnnModel& base,
                            const std::vector<HistoryDay>& history,
                            const qnn::Dataset& train, int k,
                            double acc_requirement,
                            const compress::CompressConfig& compress_cfg,
                            std::uint64_t seed);

enum class DecisionKind { Reuse, CompressNew, Fail };

struct OnlineDecision {
  DecisionKind kind = DecisionKind::Reuse;
  int entry_index = -1;  // matched entry (Reuse/Fail) or appended (CompressNew)
  double matched_distance = 0.0;
  std::string report;  // human-readable failure description
};

struct MatchContext {
  const qnn::QnnModel* base_model = nullptr;
  const qnn::Dataset* train = nullptr;
  const qnn::Dataset* val = nullptr;  // accuracy bookkeeping for new entries
  const calib::CalibrationSnapshot* snapshot = nullptr;  // today
  const compress::CompressConfig* compress_cfg = nullptr;
};

// Nearest entry by weighted distance (ties: lowest index). Farther than th_w
// from everything -> compress under today's snapshot and append (source
// online). Matched entry invalid -> failure report. Otherwise reuse.
// Throws std::invalid_argument on an empty repository.
OnlineDecision match_online(Repository& repo,
                            const calib::CalibrationVector& today,
                            const MatchContext& ctx);

// The CompressNew arm on its own: compress the base model under today's
// snapshot, append a singleton entry (mean accuracy from the validation
// split), return its index. Used by match_online and by the no-offline
// bootstrap, where day one starts from an empty repository.
int compress_and_append(Repository& repo,
                        const calib::CalibrationVector& today,
                        const MatchContext& ctx);

}  // namespace qucad::repo
