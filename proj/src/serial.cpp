// SPDX-License-Identifier: Apache-2.0
#include "qucad/serial.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qucad/common/errors.hpp"

namespace qucad::serial {

using nlohmann::json;

namespace {

constexpr qcore::GateKind kAllKinds[] = {
    qcore::GateKind::RX,  qcore::GateKind::RY,  qcore::GateKind::RZ,
    qcore::GateKind::CRX, qcore::GateKind::CRY, qcore::GateKind::CRZ,
    qcore::GateKind::CNOT, qcore::GateKind::SWAP};

json parse_or_throw(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw io_error(std::string("bad ") + what + " JSON: " + e.what());
  }
}

// Converts missing-field/wrong-type errors into io_error uniformly.
template <typename F>
auto shape_checked(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw io_error(std::string("bad ") + what + " JSON: " + e.what());
  }
}

json coupling_to_obj(const qcore::Coupling& c) {
  json arr = json::array();
  for (const auto& [a, b] : c.pairs) arr.push_back({a, b});
  return arr;
}

qcore::Coupling coupling_from_obj(const json& arr) {
  qcore::Coupling c;
  for (const json& pr : arr) c.add(pr.at(0).get<int>(), pr.at(1).get<int>());
  return c;
}

json circuit_to_obj(const qcore::ParamCircuit& c) {
  json j;
  j["n_qubits"] = c.n_qubits;
  j["coupling"] = coupling_to_obj(c.coupling);
  json gates = json::array();
  for (const qcore::Gate& g : c.gates) {
    json gj;
    gj["kind"] = qcore::to_string(g.kind);
    gj["qubits"] = g.two_qubit() ? json{g.q0, g.q1} : json{g.q0};
    if (qcore::is_rotation(g.kind)) {
      if (g.parameterized())
        gj["slot"] = g.slot;
      else
        gj["angle"] = g.angle;
    }
    gates.push_back(std::move(gj));
  }
  j["gates"] = std::move(gates);
  return j;
}

qcore::ParamCircuit circuit_from_obj(const json& j) {
  qcore::ParamCircuit c;
  c.n_qubits = j.at("n_qubits").get<int>();
  c.coupling = coupling_from_obj(j.at("coupling"));
  for (const json& gj : j.at("gates")) {
    qcore::Gate g;
    g.kind = qcore::gate_kind_from_string(gj.at("kind").get<std::string>());
    const json& qs = gj.at("qubits");
    g.q0 = qs.at(0).get<int>();
    if (qcore::is_two_qubit(g.kind)) g.q1 = qs.at(1).get<int>();
    if (gj.contains("slot")) {
      g.slot = gj.at("slot").get<int>();
      c.n_params = std::max(c.n_params, g.slot + 1);
    } else if (gj.contains("angle")) {
      g.angle = gj.at("angle").get<double>();
    }
    c.gates.push_back(g);
  }
  c.validate();
  return c;
}

json model_to_obj(const qnn::QnnModel& m) {
  json j = circuit_to_obj(m.circuit);
  j["theta"] = m.theta;
  j["readout"] = m.readout;
  j["encoding"] = {{"n_qubits", m.encoding.n_qubits},
                   {"n_features", m.encoding.n_features},
                   {"lo", m.encoding.lo},
                   {"hi", m.encoding.hi}};
  return j;
}

qnn::QnnModel model_from_obj(const json& j) {
  qnn::QnnModel m;
  m.circuit = circuit_from_obj(j);
  m.theta = j.at("theta").get<std::vector<double>>();
  m.readout = j.at("readout").get<std::vector<int>>();
  const json& e = j.at("encoding");
  m.encoding.n_qubits = e.at("n_qubits").get<int>();
  m.encoding.n_features = e.at("n_features").get<int>();
  m.encoding.lo = e.at("lo").get<std::vector<double>>();
  m.encoding.hi = e.at("hi").get<std::vector<double>>();
  m.validate();
  return m;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string format_threshold(double t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", t);
  return buf;
}

}  // namespace

std::string circuit_to_json(const qcore::ParamCircuit& c) {
  c.validate();
  return dump(circuit_to_obj(c));
}

qcore::ParamCircuit circuit_from_json(const std::string& text) {
  json j = parse_or_throw(text, "circuit");
  return shape_checked("circuit", [&] { return circuit_from_obj(j); });
}

std::string model_to_json(const qnn::QnnModel& m) {
  m.validate();
  return dump(model_to_obj(m));
}

qnn::QnnModel model_from_json(const std::string& text) {
  json j = parse_or_throw(text, "model");
  return shape_checked("model", [&] { return model_from_obj(j); });
}

std::string compressed_to_json(const CompressedModel& cm) {
  cm.model.validate();
  cm.table.validate();
  json j = model_to_obj(cm.model);
  j["mask"] = cm.mask;
  j["table"] = cm.table.levels;
  j["snapshot_id"] = cm.snapshot_id;
  return dump(j);
}

CompressedModel compressed_from_json(const std::string& text) {
  json j = parse_or_throw(text, "compressed model");
  return shape_checked("compressed model", [&] {
    CompressedModel cm;
    cm.model = model_from_obj(j);
    cm.mask = j.at("mask").get<std::vector<std::uint8_t>>();
    cm.table.levels = j.at("table").get<std::vector<double>>();
    cm.table.validate();
    cm.snapshot_id = j.value("snapshot_id", "");
    if (cm.mask.size() != cm.model.theta.size())
      throw io_error("compressed model mask length != parameter count");
    return cm;
  });
}

std::string cost_model_to_json(const compress::GateCostModel& cm) {
  json j;
  json gen = json::object();
  for (qcore::GateKind k : kAllKinds) {
    compress::GateCost c = cm.generic(k);
    gen[qcore::to_string(k)] = {c.n1q, c.n2q};
  }
  j["generic"] = std::move(gen);
  json ovr = json::array();
  for (const auto& o : cm.overrides())
    ovr.push_back({{"kind", qcore::to_string(o.kind)},
                   {"angle", o.angle},
                   {"cost", {o.cost.n1q, o.cost.n2q}}});
  j["overrides"] = std::move(ovr);
  return dump(j);
}

compress::GateCostModel cost_model_from_json(const std::string& text) {
  json j = parse_or_throw(text, "cost model");
  return shape_checked("cost model", [&] {
    compress::GateCostModel cm;
    for (const auto& [key, val] : j.at("generic").items())
      cm.set_generic(qcore::gate_kind_from_string(key),
                     {val.at(0).get<int>(), val.at(1).get<int>()});
    if (j.contains("overrides"))
      for (const json& o : j.at("overrides"))
        cm.add_override(
            qcore::gate_kind_from_string(o.at("kind").get<std::string>()),
            o.at("angle").get<double>(),
            {o.at("cost").at(0).get<int>(), o.at("cost").at(1).get<int>()});
    return cm;
  });
}

void save_repository(const std::string& path, const repo::Repository& r) {
  if (!r.schema) throw std::invalid_argument("repository has no schema");
  namespace fs = std::filesystem;
  const fs::path repo_path(path);
  const fs::path dir = repo_path.parent_path();
  const std::string stem = repo_path.stem().string();
  std::error_code ec;
  if (!dir.empty()) fs::create_directories(dir, ec);
  if (ec) throw io_error("cannot create directory: " + dir.string());

  json j;
  j["schema"] = {{"n_qubits", r.schema->n_qubits},
                 {"pairs", json::array()}};
  for (const auto& [a, b] : r.schema->pairs)
    j["schema"]["pairs"].push_back({a, b});
  j["weights"] = r.weights;
  j["th_w"] = r.th_w;
  j["acc_requirement"] = r.acc_requirement;
  j["entries"] = json::array();
  for (const repo::RepoEntry& e : r.entries) {
    const std::string model_ref = stem + "." + e.id + ".model.json";
    write_text_file((dir / model_ref).string(), model_to_json(e.model));
    json ej;
    ej["id"] = e.id;
    ej["centroid"] = e.centroid.values;
    ej["model_ref"] = model_ref;
    ej["mask"] = e.mask;
    ej["mean_acc"] = e.mean_acc;
    ej["mean_dist"] = e.mean_dist;
    ej["invalid"] = e.invalid;
    ej["source"] =
        e.source == repo::RepoEntry::Source::Offline ? "offline" : "online";
    ej["snapshot"] = json::parse(calib::snapshot_to_json_text(e.snapshot));
    j["entries"].push_back(std::move(ej));
  }
  write_text_file(path, dump(j));
}

repo::Repository load_repository(const std::string& path) {
  namespace fs = std::filesystem;
  json j = parse_or_throw(read_text_file(path), "repository");
  return shape_checked("repository", [&] {
    repo::Repository r;
    auto schema = std::make_shared<calib::CalibrationSchema>();
    schema->n_qubits = j.at("schema").at("n_qubits").get<int>();
    for (const json& pr : j.at("schema").at("pairs"))
      schema->pairs.push_back(
          qcore::make_pair_sorted(pr.at(0).get<int>(), pr.at(1).get<int>()));
    r.schema = schema;
    r.weights = j.at("weights").get<std::vector<double>>();
    if (r.weights.size() != schema->dim())
      throw io_error("repository weight length != schema dimension");
    r.th_w = j.at("th_w").get<double>();
    r.acc_requirement = j.at("acc_requirement").get<double>();
    const fs::path dir = fs::path(path).parent_path();
    for (const json& ej : j.at("entries")) {
      repo::RepoEntry e;
      e.id = ej.at("id").get<std::string>();
      e.centroid.values = ej.at("centroid").get<std::vector<double>>();
      e.centroid.schema = schema;
      if (e.centroid.values.size() != schema->dim())
        throw io_error("repository centroid length != schema dimension");
      e.model = model_from_json(
          read_text_file((dir / ej.at("model_ref").get<std::string>())
                             .string()));
      e.mask = ej.at("mask").get<std::vector<std::uint8_t>>();
      e.mean_acc = ej.at("mean_acc").get<double>();
      e.mean_dist = ej.at("mean_dist").get<double>();
      e.invalid = ej.at("invalid").get<bool>();
      const std::string src = ej.at("source").get<std::string>();
      if (src == "offline")
        e.source = repo::RepoEntry::Source::Offline;
      else if (src == "online")
        e.source = repo::RepoEntry::Source::Online;
      else
        throw io_error("repository entry source must be offline|online");
      e.snapshot = calib::snapshot_from_json_text(ej.at("snapshot").dump());
      r.entries.push_back(std::move(e));
    }
    return r;
  });
}

std::string timeline_to_json(const harness::TimelineResult& r) {
  json j;
  j["strategy"] = harness::to_string(r.strategy);
  j["offline_wall_seconds"] = r.offline_wall_seconds;
  j["total_wall_seconds"] = r.total_wall_seconds;
  j["total_optimizations"] = r.total_optimizations;
  j["days"] = json::array();
  for (const harness::DayRecord& d : r.days)
    j["days"].push_back({{"date", d.date},
                         {"accuracy", d.accuracy},
                         {"decision", d.decision},
                         {"optimizations", d.optimizations},
                         {"wall_seconds", d.wall_seconds}});
  return dump(j);
}

harness::TimelineResult timeline_from_json(const std::string& text) {
  json j = parse_or_throw(text, "timeline");
  return shape_checked("timeline", [&] {
    harness::TimelineResult r;
    r.strategy =
        harness::strategy_from_string(j.at("strategy").get<std::string>());
    r.offline_wall_seconds = j.value("offline_wall_seconds", 0.0);
    r.total_wall_seconds = j.at("total_wall_seconds").get<double>();
    r.total_optimizations = j.at("total_optimizations").get<int>();
    for (const json& dj : j.at("days")) {
      harness::DayRecord d;
      d.date = dj.at("date").get<std::string>();
      d.accuracy = dj.at("accuracy").get<double>();
      d.decision = dj.value("decision", "");
      d.optimizations = dj.value("optimizations", 0);
      d.wall_seconds = dj.value("wall_seconds", 0.0);
      r.days.push_back(std::move(d));
    }
    return r;
  });
}

void write_summary_csv(const std::string& path,
                       const std::vector<harness::SummaryRow>& rows,
                       const std::vector<double>& thresholds) {
  std::ostringstream out;
  out.precision(12);
  out << "strategy,mean_acc,vs_baseline,variance";
  for (double t : thresholds) {
    const std::string label = format_threshold(t);
    out << ",days_over_" << label << ",delta_days_over_" << label;
  }
  out << ",total_optimizations,wall_seconds\n";
  for (const harness::SummaryRow& r : rows) {
    if (r.days_over.size() != thresholds.size() ||
        r.delta_days_over.size() != thresholds.size())
      throw std::invalid_argument("summary row thresholds mismatch");
    out << r.strategy << ',' << r.mean_acc << ',' << r.delta_mean << ','
        << r.variance;
    for (size_t t = 0; t < thresholds.size(); ++t)
      out << ',' << r.days_over[t] << ',' << r.delta_days_over[t];
    out << ',' << r.total_optimizations << ',' << r.total_wall_seconds
        << '\n';
  }
  write_text_file(path, out.str());
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw io_error("read failed: " + path);
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open for writing: " + path);
  out << text;
  out.flush();
  if (!out) throw io_error("write failed: " + path);
}

}  // namespace qucad::serial
