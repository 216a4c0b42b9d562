// SPDX-License-Identifier: Apache-2.0
#include "qucad/calib/calibration.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "qucad/common/errors.hpp"

namespace qucad::calib {

using nlohmann::json;
using qcore::QubitPair;

double CalibrationSnapshot::pair_error(int a, int b) const {
  auto it = tq_error.find(qcore::make_pair_sorted(a, b));
  if (it == tq_error.end())
    throw std::invalid_argument("snapshot has no error entry for qubit pair");
  return it->second;
}

void CalibrationSnapshot::validate() const {
  if (n_qubits <= 0) throw std::invalid_argument("snapshot needs qubits");
  if (static_cast<int>(sq_error.size()) != n_qubits ||
      static_cast<int>(ro_error.size()) != n_qubits)
    throw std::invalid_argument("snapshot field lengths != n_qubits");
  auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
  for (double p : sq_error)
    if (!in_unit(p)) throw std::invalid_argument("sq_error outside [0,1]");
  for (const auto& [pr, p] : tq_error) {
    if (pr.first < 0 || pr.second >= n_qubits || pr.first >= pr.second)
      throw std::invalid_argument("bad qubit pair in snapshot");
    if (!in_unit(p)) throw std::invalid_argument("tq_error outside [0,1]");
  }
  for (const auto& r : ro_error)
    if (!in_unit(r[0]) || !in_unit(r[1]))
      throw std::invalid_argument("ro_error outside [0,1]");
}

CalibrationSchema CalibrationSchema::from_coupling(
    int n_qubits, const qcore::Coupling& coupling) {
  CalibrationSchema s;
  s.n_qubits = n_qubits;
  s.pairs.assign(coupling.pairs.begin(), coupling.pairs.end());
  return s;
}

CalibrationSchema CalibrationSchema::from_snapshot(
    const CalibrationSnapshot& snap) {
  CalibrationSchema s;
  s.n_qubits = snap.n_qubits;
  for (const auto& [pr, _] : snap.tq_error) s.pairs.push_back(pr);
  return s;
}

std::vector<std::string> CalibrationSchema::labels() const {
  std::vector<std::string> out;
  out.reserve(dim());
  for (int q = 0; q < n_qubits; ++q) out.push_back("sq" + std::to_string(q));
  for (const auto& [a, b] : pairs)
    out.push_back("tq" + std::to_string(a) + "-" + std::to_string(b));
  for (int q = 0; q < n_qubits; ++q) out.push_back("ro" + std::to_string(q) + "_p10");
  for (int q = 0; q < n_qubits; ++q) out.push_back("ro" + std::to_string(q) + "_p01");
  return out;
}

void require_same_schema(const CalibrationVector& a,
                         const CalibrationVector& b) {
  if (!a.schema || !b.schema)
    throw std::invalid_argument("calibration vector without a schema");
  if (a.schema != b.schema && !(*a.schema == *b.schema))
    throw std::invalid_argument("calibration vectors use different schemas");
  if (a.values.size() != a.schema->dim() || b.values.size() != b.schema->dim())
    throw std::invalid_argument("calibration vector length != schema dim");
}

CalibrationVector vectorize(const CalibrationSnapshot& snap,
                            std::shared_ptr<const CalibrationSchema> schema) {
  snap.validate();
  if (!schema) throw std::invalid_argument("vectorize needs a schema");
  if (schema->n_qubits != snap.n_qubits)
    throw std::invalid_argument("schema qubit count != snapshot");
  CalibrationVector v;
  v.schema = schema;
  v.values.reserve(schema->dim());
  for (int q = 0; q < snap.n_qubits; ++q)
    v.values.push_back(snap.sq_error[static_cast<size_t>(q)]);
  for (const auto& pr : schema->pairs) {
    auto it = snap.tq_error.find(pr);
    if (it == snap.tq_error.end())
      throw std::invalid_argument("snapshot missing a schema pair");
    v.values.push_back(it->second);
  }
  for (int q = 0; q < snap.n_qubits; ++q)
    v.values.push_back(snap.ro_error[static_cast<size_t>(q)][0]);
  for (int q = 0; q < snap.n_qubits; ++q)
    v.values.push_back(snap.ro_error[static_cast<size_t>(q)][1]);
  return v;
}

qcore::NoiseModel build_noise_model(const CalibrationSnapshot& snap) {
  snap.validate();
  qcore::NoiseModel nm;
  nm.n_qubits = snap.n_qubits;
  nm.p1 = snap.sq_error;
  nm.p2 = snap.tq_error;
  nm.readout.reserve(static_cast<size_t>(snap.n_qubits));
  for (const auto& r : snap.ro_error)
    nm.readout.push_back(qcore::ReadoutConfusion::from_flip_probs(r[0], r[1]));
  nm.validate();
  return nm;
}

namespace {

struct PathSlice {
  std::string file;
  long begin = 0;
  long end = -1;  // -1 = to the end
};

PathSlice split_slice(const std::string& path) {
  static const std::regex slice_re(R"(^(.*):(\d+):(\d+)$)");
  std::smatch m;
  if (std::regex_match(path, m, slice_re))
    return {m[1].str(), std::stol(m[2].str()), std::stol(m[3].str())};
  return {path, 0, -1};
}

json snapshot_to_json(const CalibrationSnapshot& s) {
  json j;
  j["date"] = s.date;
  json sq = json::object();
  for (int q = 0; q < s.n_qubits; ++q)
    sq[std::to_string(q)] = s.sq_error[static_cast<size_t>(q)];
  j["sq_error"] = sq;
  json tq = json::object();
  for (const auto& [pr, p] : s.tq_error)
    tq[std::to_string(pr.first) + "-" + std::to_string(pr.second)] = p;
  j["tq_error"] = tq;
  json ro = json::object();
  for (int q = 0; q < s.n_qubits; ++q)
    ro[std::to_string(q)] = s.ro_error[static_cast<size_t>(q)];
  j["ro_error"] = ro;
  return j;
}

CalibrationSnapshot snapshot_from_json(const json& j) {
  CalibrationSnapshot s;
  s.date = j.value("date", "");
  const json& sq = j.at("sq_error");
  for (const auto& [key, _] : sq.items())
    s.n_qubits = std::max(s.n_qubits, std::stoi(key) + 1);
  if (static_cast<int>(sq.size()) != s.n_qubits)
    throw io_error("calibration day is missing a qubit in sq_error");
  s.sq_error.resize(static_cast<size_t>(s.n_qubits));
  for (const auto& [key, val] : sq.items())
    s.sq_error[static_cast<size_t>(std::stoi(key))] = val.get<double>();
  for (const auto& [key, val] : j.at("tq_error").items()) {
    const auto dash = key.find('-');
    if (dash == std::string::npos)
      throw io_error("bad pair key in calibration file: " + key);
    const int a = std::stoi(key.substr(0, dash));
    const int b = std::stoi(key.substr(dash + 1));
    s.tq_error[qcore::make_pair_sorted(a, b)] = val.get<double>();
  }
  const json& ro = j.at("ro_error");
  if (ro.size() != sq.size())
    throw io_error("calibration day readout/sq qubit counts differ");
  s.ro_error.resize(static_cast<size_t>(s.n_qubits));
  for (const auto& [key, val] : ro.items())
    s.ro_error[static_cast<size_t>(std::stoi(key))] =
        val.get<std::array<double, 2>>();
  s.validate();
  return s;
}

}  // namespace

std::string snapshot_to_json_text(const CalibrationSnapshot& s) {
  s.validate();
  return snapshot_to_json(s).dump();
}

CalibrationSnapshot snapshot_from_json_text(const std::string& text) {
  try {
    return snapshot_from_json(json::parse(text));
  } catch (const json::exception& e) {
    throw io_error(std::string("bad calibration day JSON: ") + e.what());
  }
}

std::vector<CalibrationSnapshot> parse_calibrations(const std::string& path) {
  const PathSlice slice = split_slice(path);
  std::ifstream in(slice.file);
  if (!in) throw io_error("cannot open calibration file: " + slice.file);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw io_error("bad calibration JSON in " + slice.file + ": " + e.what());
  }
  std::vector<CalibrationSnapshot> days;
  try {
    for (const json& day : j.at("days"))
      days.push_back(snapshot_from_json(day));
  } catch (const json::exception& e) {
    throw io_error("bad calibration JSON in " + slice.file + ": " + e.what());
  }
  for (const auto& d : days)
    if (d.n_qubits != days.front().n_qubits ||
        (d.tq_error.size() != days.front().tq_error.size()))
      throw io_error("calibration days disagree on device shape in " +
                     slice.file);
  const long n = static_cast<long>(days.size());
  const long end = slice.end < 0 ? n : slice.end;
  if (slice.begin > end || end > n)
    throw io_error("day slice out of range for " + path);
  return {days.begin() + slice.begin, days.begin() + end};
}

void write_calibrations(const std::string& path,
                        const std::vector<CalibrationSnapshot>& days) {
  if (days.empty()) throw std::invalid_argument("no days to write");
  json j;
  j["coupling"] = json::array();
  for (const auto& [pr, _] : days.front().tq_error)
    j["coupling"].push_back({pr.first, pr.second});
  j["days"] = json::array();
  for (const auto& d : days) {
    d.validate();
    j["days"].push_back(snapshot_to_json(d));
  }
  std::ofstream out(path);
  if (!out) throw io_error("cannot write calibration file: " + path);
  out << j.dump(2) << '\n';
}

void write_calibrations_csv(const std::string& path,
                            const std::vector<CalibrationSnapshot>& days) {
  if (days.empty()) throw std::invalid_argument("no days to write");
  auto schema = std::make_shared<CalibrationSchema>(
      CalibrationSchema::from_snapshot(days.front()));
  std::ofstream out(path);
  if (!out) throw io_error("cannot write calibration CSV: " + path);
  out << "date";
  for (const std::string& l : schema->labels()) out << ',' << l;
  out << '\n';
  out.precision(12);
  for (const auto& d : days) {
    const CalibrationVector v = vectorize(d, schema);
    out << d.date;
    for (double x : v.values) out << ',' << x;
    out << '\n';
  }
}

}  // namespace qucad::calib
