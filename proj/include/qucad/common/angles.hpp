// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>

namespace qucad {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

// Maps any angle into [0, 2*pi).
inline double wrap_angle(double theta) {
  double r = std::fmod(theta, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;  // fmod can land exactly on 2*pi after the fixup
  return r;
}

// Circular distance between two angles, in [0, pi].
inline double circular_distance(double a, double b) {
  double d = wrap_angle(a - b);
  return d <= std::numbers::pi ? d : two_pi - d;
}

}  // namespace qucad
