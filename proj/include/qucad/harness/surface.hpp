// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qucad/qnn/model.hpp"

namespace qucad::harness {

// Row-major steps x steps grid; entry (a, b) is the value at
// theta_i = a * 2*pi / steps, theta_j = b * 2*pi / steps.
struct SurfaceScan {
  int steps = 0;
  int slot_i = 0, slot_j = 0;
  std::vector<double> noiseless;
  std::optional<std::vector<double>> noisy;
  std::optional<std::vector<double>> diff;  // noisy - noiseless
};

// Mean loss over `data` for every lattice point of (theta_i, theta_j) in
// [0, 2*pi)^2, other parameters held at the model's values. The noisy and
// difference grids are filled when a noise model is supplied.
SurfaceScan scan_loss_surface(const qnn::QnnModel& model, int slot_i,
                              int slot_j, int steps, const qnn::Dataset& data,
                              const qcore::NoiseModel* noise,
                              const compress::GateCostModel& cost =
                                  compress::GateCostModel::standard());

// Headerless CSV, one grid row per line.
void write_grid_csv(const std::string& path, const std::vector<double>& grid,
                    int steps);

}  // namespace qucad::harness
