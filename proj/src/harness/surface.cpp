// SPDX-License-Identifier: Apache-2.0
#include "qucad/harness/surface.hpp"

#include <fstream>
#include <stdexcept>

#include "qucad/common/angles.hpp"
#include "qucad/common/errors.hpp"

namespace qucad::harness {

SurfaceScan scan_loss_surface(const qnn::QnnModel& model, int slot_i,
                              int slot_j, int steps, const qnn::Dataset& data,
                              const qcore::NoiseModel* noise,
                              const compress::GateCostModel& cost) {
  model.validate();
  int n_params = static_cast<int>(model.theta.size());
  if (slot_i == slot_j)
    throw std::invalid_argument("scan_loss_surface: slots must differ");
  if (slot_i < 0 || slot_i >= n_params || slot_j < 0 || slot_j >= n_params)
    throw std::invalid_argument("scan_loss_surface: slot out of range");
  if (steps < 1) throw std::invalid_argument("scan_loss_surface: steps < 1");
  if (data.size() == 0)
    throw std::invalid_argument("scan_loss_surface: empty dataset");

  SurfaceScan scan;
  scan.steps = steps;
  scan.slot_i = slot_i;
  scan.slot_j = slot_j;
  scan.noiseless.resize(static_cast<size_t>(steps) * steps);
  if (noise) {
    noise->validate();
    scan.noisy.emplace(scan.noiseless.size());
    scan.diff.emplace(scan.noiseless.size());
  }

  qnn::QnnModel probe = model;
  const double step = two_pi / steps;
  for (int a = 0; a < steps; ++a) {
    probe.theta[slot_i] = a * step;
    for (int b = 0; b < steps; ++b) {
      probe.theta[slot_j] = b * step;
      size_t at = static_cast<size_t>(a) * steps + b;
      double clean = qnn::mean_loss(probe, data, nullptr, cost);
      scan.noiseless[at] = clean;
      if (noise) {
        double dirty = qnn::mean_loss(probe, data, noise, cost);
        (*scan.noisy)[at] = dirty;
        (*scan.diff)[at] = dirty - clean;
      }
    }
  }
  return scan;
}

void write_grid_csv(const std::string& path, const std::vector<double>& grid,
                    int steps) {
  if (steps < 1 || grid.size() != static_cast<size_t>(steps) * steps)
    throw std::invalid_argument("write_grid_csv: grid is not steps x steps");
  std::ofstream out(path);
  if (!out) throw io_error("cannot open for writing: " + path);
  out.precision(17);
  for (int a = 0; a < steps; ++a) {
    for (int b = 0; b < steps; ++b) {
      if (b) out << ',';
      out << grid[static_cast<size_t>(a) * steps + b];
    }
    out << '\n';
  }
  if (!out) throw io_error("write failed: " + path);
}

}  // namespace qucad::harness
