// SPDX-License-Identifier: Apache-2.0
#include "qucad/repo/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace qucad::repo {

WeightVector correlation_weights(
    const std::vector<calib::CalibrationVector>& days,
    const std::vector<double>& p) {
  const size_t n = days.size();
  if (n < 2) throw std::invalid_argument("correlation needs >= 2 days");
  if (p.size() != n) throw std::invalid_argument("accuracy vector length != days");
  for (size_t i = 1; i < n; ++i) calib::require_same_schema(days[0], days[i]);
  const size_t d = days[0].values.size();

  double p_mean = 0.0;
  for (double v : p) p_mean += v;
  p_mean /= static_cast<double>(n);
  double p_var = 0.0;
  for (double v : p) p_var += (v - p_mean) * (v - p_mean);

  WeightVector w(d, 0.0);
  for (size_t j = 0; j < d; ++j) {
    double c_mean = 0.0;
    for (size_t i = 0; i < n; ++i) c_mean += days[i].values[j];
    c_mean /= static_cast<double>(n);
    double c_var = 0.0, cov = 0.0;
    for (size_t i = 0; i < n; ++i) {
      const double dc = days[i].values[j] - c_mean;
      c_var += dc * dc;
      cov += dc * (p[i] - p_mean);
    }
    if (c_var <= 0.0 || p_var <= 0.0) continue;  // zero variance -> 0
    w[j] = std::abs(cov / std::sqrt(c_var * p_var));
  }
  return w;
}

double weighted_distance(const calib::CalibrationVector& a,
                         const calib::CalibrationVector& b,
                         const WeightVector& w) {
  calib::require_same_schema(a, b);
  if (w.size() != a.values.size())
    throw std::invalid_argument("weight length != vector dimension");
  double d = 0.0;
  for (size_t j = 0; j < w.size(); ++j)
    d += w[j] * std::abs(a.values[j] - b.values[j]);
  return d;
}

namespace {

size_t nearest_centroid(const calib::CalibrationVector& v,
                        const std::vector<calib::CalibrationVector>& centroids,
                        const WeightVector& w, double* dist_out) {
  size_t best = 0;
  double best_d = weighted_distance(v, centroids[0], w);
  for (size_t c = 1; c < centroids.size(); ++c) {
    const double d = weighted_distance(v, centroids[c], w);
    if (d < best_d) {  // strict: equidistant keeps the lowest index
      best = c;
      best_d = d;
    }
  }
  if (dist_out) *dist_out = best_d;
  return best;
}

}  // namespace

ClusterModel weighted_kmeans(const std::vector<calib::CalibrationVector>& days,
                             const std::vector<double>& p, int k,
                             std::uint64_t seed) {
  return kmedians(days, correlation_weights(days, p), k, seed, &p);
}

ClusterModel kmedians(const std::vector<calib::CalibrationVector>& days,
                      const WeightVector& weights, int k, std::uint64_t seed,
                      const std::vector<double>* p) {
  const size_t n = days.size();
  if (k < 1 || static_cast<size_t>(k) > n)
    throw std::invalid_argument("need 1 <= K <= number of days");
  if (p && p->size() != n)
    throw std::invalid_argument("accuracy vector length != days");
  for (size_t i = 1; i < n; ++i) calib::require_same_schema(days[0], days[i]);
  if (weights.size() != days[0].values.size())
    throw std::invalid_argument("weight length != vector dimension");
  ClusterModel model;
  model.k = k;
  model.weights = weights;
  const WeightVector& w = model.weights;

  // ++-style seeding under L1: draw proportional to distance-to-chosen.
  std::mt19937_64 rng(seed);
  std::vector<size_t> seeds{
      std::uniform_int_distribution<size_t>(0, n - 1)(rng)};
  while (seeds.size() < static_cast<size_t>(k)) {
    std::vector<double> dist(n);
    double total = 0.0;
    for (size_t i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (size_t s : seeds)
        best = std::min(best, weighted_distance(days[i], days[s], w));
      dist[i] = best;
      total += best;
    }
    size_t pick = 0;
    if (total > 0.0) {
      double r = std::uniform_real_distribution<double>(0.0, total)(rng);
      while (pick + 1 < n && r >= dist[pick]) r -= dist[pick++];
      if (dist[pick] == 0.0)  // fp spill-over: fall back to the farthest point
        pick = static_cast<size_t>(
            std::max_element(dist.begin(), dist.end()) - dist.begin());
    } else {
      pick = std::uniform_int_distribution<size_t>(0, n - 1)(rng);
    }
    seeds.push_back(pick);
  }
  model.centroids.reserve(static_cast<size_t>(k));
  for (size_t s : seeds) model.centroids.push_back(days[s]);

  model.assignment.assign(n, -1);
  std::vector<int> prev(n, -2);
  std::vector<double> day_dist(n, 0.0);
  for (int iter = 0; iter < 100; ++iter) {
    for (size_t i = 0; i < n; ++i)
      model.assignment[i] = static_cast<int>(
          nearest_centroid(days[i], model.centroids, w, &day_dist[i]));

    // Relocate empty clusters onto the farthest point.
    std::vector<int> count(static_cast<size_t>(k), 0);
    for (int a : model.assignment) ++count[static_cast<size_t>(a)];
    for (int c = 0; c < k; ++c) {
      if (count[static_cast<size_t>(c)] > 0) continue;
      size_t far = 0;
      for (size_t i = 1; i < n; ++i)
        if (day_dist[i] > day_dist[far]) far = i;
      --count[static_cast<size_t>(model.assignment[far])];
      model.centroids[static_cast<size_t>(c)] = days[far];
      model.assignment[far] = c;
      day_dist[far] = 0.0;
      count[static_cast<size_t>(c)] = 1;
    }

    model.wsae = 0.0;
    for (double d : day_dist) model.wsae += d;
    model.wsae_trace.push_back(model.wsae);
    if (model.assignment == prev) break;
    prev = model.assignment;

    // Per-dimension median update (midpoint of the two middles when even).
    const size_t dim = days[0].values.size();
    for (int c = 0; c < k; ++c) {
      std::vector<size_t> members;
      for (size_t i = 0; i < n; ++i)
        if (model.assignment[i] == c) members.push_back(i);
      for (size_t j = 0; j < dim; ++j) {
        std::vector<double> col;
        col.reserve(members.size());
        for (size_t i : members) col.push_back(days[i].values[j]);
        std::sort(col.begin(), col.end());
        const size_t mid = col.size() / 2;
        model.centroids[static_cast<size_t>(c)].values[j] =
            col.size() % 2 ? col[mid] : 0.5 * (col[mid - 1] + col[mid]);
      }
    }
  }

  model.mean_accuracy.assign(static_cast<size_t>(k), 0.0);
  model.mean_distance.assign(static_cast<size_t>(k), 0.0);
  std::vector<int> count(static_cast<size_t>(k), 0);
  for (size_t i = 0; i < n; ++i) {
    const auto c = static_cast<size_t>(model.assignment[i]);
    if (p) model.mean_accuracy[c] += (*p)[i];
    model.mean_distance[c] +=
        weighted_distance(days[i], model.centroids[c], w);
    ++count[c];
  }
  for (int c = 0; c < k; ++c) {
    const auto ci = static_cast<size_t>(c);
    if (count[ci] > 0) {
      model.mean_accuracy[ci] /= count[ci];
      model.mean_distance[ci] /= count[ci];
    }
  }
  return model;
}

}  // namespace qucad::repo
