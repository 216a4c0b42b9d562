// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qucad/qcore/noise.hpp"

namespace qucad::calib {

// One day of device characterisation: depolarizing error rates plus readout
// flip probabilities {p(1|0), p(0|1)} per qubit.
struct CalibrationSnapshot {
  std::string date;
  int n_qubits = 0;
  std::vector<double> sq_error;
  std::map<qcore::QubitPair, double> tq_error;
  std::vector<std::array<double, 2>> ro_error;

  double pair_error(int a, int b) const;
  void validate() const;
};

// Fixed feature order shared by every vector that is ever compared: 1q
// errors by qubit, 2q errors by sorted pair, then readout p(1|0) and p(0|1)
// by qubit. Dimension = n + |pairs| + 2n.
struct CalibrationSchema {
  int n_qubits = 0;
  std::vector<qcore::QubitPair> pairs;  // sorted ascending

  static CalibrationSchema from_coupling(int n_qubits,
                                         const qcore::Coupling& coupling);
  static CalibrationSchema from_snapshot(const CalibrationSnapshot& snap);

  size_t dim() const {
    return static_cast<size_t>(3 * n_qubits) + pairs.size();
  }
  std::vector<std::string> labels() const;

  bool operator==(const CalibrationSchema&) const = default;
};

struct CalibrationVector {
  std::vector<double> values;
  std::shared_ptr<const CalibrationSchema> schema;
};

// Throws std::invalid_argument unless both vectors carry an identical schema.
void require_same_schema(const CalibrationVector& a,
                         const CalibrationVector& b);

CalibrationVector vectorize(const CalibrationSnapshot& snap,
                            std::shared_ptr<const CalibrationSchema> schema);

// Depolarizing-per-occurrence noise model straight from the snapshot.
qcore::NoiseModel build_noise_model(const CalibrationSnapshot& snap);

// Calibration file JSON: { coupling: [[a,b],...], days: [{date,
// sq_error: {"q": r}, tq_error: {"a-b": r}, ro_error: {"q": [p10, p01]}}] }.
// `path` may carry a slice suffix "file.json:begin:end" (half-open day
// range).
std::vector<CalibrationSnapshot> parse_calibrations(const std::string& path);
void write_calibrations(const std::string& path,
                        const std::vector<CalibrationSnapshot>& days);

// One day in the same shape, as JSON text (shared with the repository file).
std::string snapshot_to_json_text(const CalibrationSnapshot& s);
CalibrationSnapshot snapshot_from_json_text(const std::string& text);

// One row per day, vectorized columns with a header line.
void write_calibrations_csv(const std::string& path,
                            const std::vector<CalibrationSnapshot>& days);

}  // namespace qucad::calib
