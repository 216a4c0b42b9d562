// SPDX-License-Identifier: Apache-2.0
#include "qucad/compress/table.hpp"

#include <numbers>
#include <stdexcept>

#include "qucad/common/angles.hpp"

namespace qucad::compress {

CompressionTable CompressionTable::quarter_turns() {
  const double pi = std::numbers::pi;
  return CompressionTable{{0.0, 0.5 * pi, pi, 1.5 * pi}};
}

void CompressionTable::validate() const {
  if (levels.empty()) throw std::invalid_argument("empty compression table");
  for (size_t i = 0; i < levels.size(); ++i) {
    if (levels[i] < 0.0 || levels[i] >= two_pi)
      throw std::invalid_argument("compression level outside [0, 2*pi)");
    if (i > 0 && levels[i] <= levels[i - 1])
      throw std::invalid_argument("compression levels not strictly sorted");
  }
}

size_t nearest_level(double theta, const CompressionTable& table) {
  table.validate();
  size_t best = 0;
  double best_d = circular_distance(theta, table.levels[0]);
  for (size_t i = 1; i < table.levels.size(); ++i) {
    const double d = circular_distance(theta, table.levels[i]);
    if (d < best_d) {  // strict: ties keep the earlier (smaller) level
      best = i;
      best_d = d;
    }
  }
  return best;
}

}  // namespace qucad::compress
