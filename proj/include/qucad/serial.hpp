// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "qucad/harness/timeline.hpp"

// JSON / CSV persistence for every artifact the CLI moves between runs.
// Formats:
//   circuit      { n_qubits, coupling: [[a,b],...], gates: [{kind, qubits,
//                  slot | angle}] }   (angles in radians; basis states are
//                  little-endian, qubit 0 = least significant bit)
//   model        circuit + { theta, readout, encoding: {n_qubits,
//                  n_features, lo, hi} }
//   compressed   model + { mask, table, snapshot_id }
//   cost model   { generic: {kind: [n1q, n2q]}, overrides: [{kind, angle,
//                  cost: [n1q, n2q]}] }
//   repository   { weights, th_w, acc_requirement, entries: [{centroid,
//                  model_ref, mean_acc, mean_dist, invalid, source, id}] };
//                  each entry's model lives in its own file next to the
//                  repository file.
//   timeline     { strategy, offline_wall_seconds, total_*, days: [{date,
//                  accuracy, decision, optimizations, wall_seconds}] }
namespace qucad::serial {

// --- circuits and models ---------------------------------------------------
std::string circuit_to_json(const qcore::ParamCircuit& c);
qcore::ParamCircuit circuit_from_json(const std::string& text);

std::string model_to_json(const qnn::QnnModel& m);
qnn::QnnModel model_from_json(const std::string& text);

struct CompressedModel {
  qnn::QnnModel model;
  std::vector<std::uint8_t> mask;
  compress::CompressionTable table;
  std::string snapshot_id;
};
std::string compressed_to_json(const CompressedModel& cm);
CompressedModel compressed_from_json(const std::string& text);

// --- cost model ------------------------------------------------------------
std::string cost_model_to_json(const compress::GateCostModel& cm);
compress::GateCostModel cost_model_from_json(const std::string& text);

// --- repository ------------------------------------------------------------
// Writes `path` plus one "<stem>.<entry id>.model.json" per entry in the
// same directory; model_ref records the file name.
void save_repository(const std::string& path, const repo::Repository& r);
repo::Repository load_repository(const std::string& path);

// --- experiment results ----------------------------------------------------
std::string timeline_to_json(const harness::TimelineResult& r);
harness::TimelineResult timeline_from_json(const std::string& text);

// Table-style CSV: strategy, mean_acc, vs_baseline, variance, days_over_* /
// delta_days_over_* per threshold, total optimizations, wall seconds.
void write_summary_csv(const std::string& path,
                       const std::vector<harness::SummaryRow>& rows,
                       const std::vector<double>& thresholds);

// --- files -----------------------------------------------------------------
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qucad::serial
