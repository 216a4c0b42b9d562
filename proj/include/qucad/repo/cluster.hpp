// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "qucad/calib/calibration.hpp"

namespace qucad::repo {

using WeightVector = std::vector<double>;

// w_j = |Pearson correlation(column j of the day matrix, p)|, 0 whenever
// either side has zero variance.
WeightVector correlation_weights(
    const std::vector<calib::CalibrationVector>& days,
    const std::vector<double>& p);

// sum_j w_j * |a_j - b_j|
double weighted_distance(const calib::CalibrationVector& a,
                         const calib::CalibrationVector& b,
                         const WeightVector& w);

struct ClusterModel {
  int k = 0;
  std::vector<calib::CalibrationVector> centroids;  // per-dimension medians
  std::vector<int> assignment;                      // per input day
  std::vector<double> mean_accuracy;                // per cluster
  std::vector<double> mean_distance;                // per cluster, weighted
  WeightVector weights;
  double wsae = 0.0;
  std::vector<double> wsae_trace;  // one entry per iteration, non-increasing
};

// K-medians under weighted L1: ++-style seeding (new seeds drawn with
// probability proportional to distance from the chosen set), assignment with
// lowest-index tie-break, per-dimension median centroid updates, empty
// clusters reseeded to the currently farthest point. Stops when assignments
// stabilize or after 100 iterations.
ClusterModel weighted_kmeans(const std::vector<calib::CalibrationVector>& days,
                             const std::vector<double>& p, int k,
                             std::uint64_t seed);

// Same clustering with caller-supplied weights; mean_accuracy is left empty
// unless p is given. weighted_kmeans = correlation_weights + this.
ClusterModel kmedians(const std::vector<calib::CalibrationVector>& days,
                      const WeightVector& weights, int k, std::uint64_t seed,
                      const std::vector<double>* p = nullptr);

}  // namespace qucad::repo
