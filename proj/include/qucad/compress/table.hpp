// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace qucad::compress {

// Sorted distinct angles in [0, 2*pi) that parameters may be snapped to.
struct CompressionTable {
  std::vector<double> levels;

  // {0, pi/2, pi, 3*pi/2}
  static CompressionTable quarter_turns();

  // Levels sorted, distinct, inside [0, 2*pi); at least one entry.
  void validate() const;
};

// Index of the level closest to theta by circular distance; ties pick the
// smaller level value.
size_t nearest_level(double theta, const CompressionTable& table);

}  // namespace qucad::compress
