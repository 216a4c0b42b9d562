// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qucad::qnn {

struct Dataset {
  std::vector<std::vector<double>> features;
  std::vector<int> labels;
  int n_classes = 0;

  size_t size() const { return features.size(); }
  size_t n_features() const {
    return features.empty() ? 0 : features.front().size();
  }
  void validate() const;
};

// Feature columns followed by one integer label column.
Dataset load_csv(const std::string& path, bool header);

// Deterministic shuffled split into train/val/test fractions (test gets the
// remainder). Fractions must be positive and sum to < 1 + epsilon.
struct DataSplit {
  Dataset train, val, test;
};
DataSplit split_dataset(const Dataset& d, double train_frac, double val_frac,
                        std::uint64_t seed);

// Per-feature min/max over the dataset (used for encoding scale).
void feature_ranges(const Dataset& d, std::vector<double>& lo,
                    std::vector<double>& hi);

}  // namespace qucad::qnn
