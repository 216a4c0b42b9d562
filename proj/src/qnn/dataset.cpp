// SPDX-License-Identifier: Apache-2.0
#include "qucad/qnn/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qucad/common/errors.hpp"

namespace qucad::qnn {

void Dataset::validate() const {
  if (features.size() != labels.size())
    throw std::invalid_argument("feature/label count mismatch");
  if (n_classes <= 0) throw std::invalid_argument("dataset needs classes");
  const size_t d = n_features();
  for (const auto& f : features)
    if (f.size() != d) throw std::invalid_argument("ragged feature rows");
  for (int l : labels)
    if (l < 0 || l >= n_classes)
      throw std::invalid_argument("label outside [0, classes)");
}

Dataset load_csv(const std::string& path, bool header) {
  std::ifstream in(path);
  if (!in) throw io_error("cannot open dataset: " + path);
  Dataset d;
  std::string line;
  bool first = true;
  int max_label = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (first && header) {
      first = false;
      continue;
    }
    first = false;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      try {
        row.push_back(std::stod(cell));
      } catch (const std::exception&) {
        throw io_error("bad numeric cell in " + path + ": " + cell);
      }
    }
    if (row.size() < 2) throw io_error("dataset rows need >= 2 columns");
    const double raw_label = row.back();
    row.pop_back();
    const int label = static_cast<int>(raw_label);
    if (static_cast<double>(label) != raw_label || label < 0)
      throw io_error("label column must hold non-negative integers");
    max_label = std::max(max_label, label);
    d.features.push_back(std::move(row));
    d.labels.push_back(label);
  }
  if (d.features.empty()) throw io_error("dataset is empty: " + path);
  d.n_classes = max_label + 1;
  d.validate();
  return d;
}

DataSplit split_dataset(const Dataset& d, double train_frac, double val_frac,
                        std::uint64_t seed) {
  d.validate();
  if (train_frac <= 0.0 || val_frac <= 0.0 || train_frac + val_frac >= 1.0)
    throw std::invalid_argument("split fractions must be positive, sum < 1");
  std::vector<size_t> order(d.size());
  std::iota(order.begin(), order.end(), size_t{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  const size_t n_train = static_cast<size_t>(train_frac * static_cast<double>(d.size()));
  const size_t n_val = static_cast<size_t>(val_frac * static_cast<double>(d.size()));
  DataSplit out;
  auto take = [&](Dataset& dst, size_t lo, size_t hi) {
    dst.n_classes = d.n_classes;
    for (size_t i = lo; i < hi; ++i) {
      dst.features.push_back(d.features[order[i]]);
      dst.labels.push_back(d.labels[order[i]]);
    }
  };
  take(out.train, 0, n_train);
  take(out.val, n_train, n_train + n_val);
  take(out.test, n_train + n_val, d.size());
  if (out.train.features.empty() || out.val.features.empty() ||
      out.test.features.empty())
    throw std::invalid_argument("split produced an empty partition");
  return out;
}

void feature_ranges(const Dataset& d, std::vector<double>& lo,
                    std::vector<double>& hi) {
  const size_t nf = d.n_features();
  lo.assign(nf, std::numeric_limits<double>::infinity());
  hi.assign(nf, -std::numeric_limits<double>::infinity());
  for (const auto& row : d.features)
    for (size_t j = 0; j < nf; ++j) {
      lo[j] = std::min(lo[j], row[j]);
      hi[j] = std::max(hi[j], row[j]);
    }
}

}  // namespace qucad::qnn
