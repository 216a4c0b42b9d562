// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: synthetic calibration generation, training,
// compression, repository construction, multi-day timelines, loss-surface
// scans, and summary reports. Exit codes: 0 success, 1 validation / usage
// error, 2 file error.
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qucad/calib/drift.hpp"
#include "qucad/common/errors.hpp"
#include "qucad/harness/surface.hpp"
#include "qucad/serial.hpp"

namespace {

using namespace qucad;

struct DataOpts {
  std::string path;
  bool header = false;
  double train_frac = 0.6;
  double val_frac = 0.2;
  std::uint64_t split_seed = 42;
};

void add_data_opts(CLI::App* cmd, DataOpts& d) {
  cmd->add_option("--dataset", d.path, "CSV: feature columns then int label")
      ->required();
  cmd->add_flag("--header", d.header, "dataset has a header row");
  cmd->add_option("--train-frac", d.train_frac, "training fraction");
  cmd->add_option("--val-frac", d.val_frac, "validation fraction");
  cmd->add_option("--split-seed", d.split_seed, "dataset shuffle seed");
}

qnn::DataSplit load_split(const DataOpts& d) {
  qnn::Dataset all = qnn::load_csv(d.path, d.header);
  return qnn::split_dataset(all, d.train_frac, d.val_frac, d.split_seed);
}

void add_train_opts(CLI::App* cmd, qnn::TrainConfig& t) {
  cmd->add_option("--epochs", t.epochs, "training epochs");
  cmd->add_option("--batch", t.batch_size, "minibatch size");
  cmd->add_option("--lr", t.lr, "learning rate");
  cmd->add_option("--momentum", t.momentum, "momentum coefficient");
}

struct CompressOpts {
  compress::CompressConfig cfg;
  bool agnostic = false;
  std::optional<double> abs_threshold;
};

void add_compress_opts(CLI::App* cmd, CompressOpts& c) {
  cmd->add_option("--rho", c.cfg.rho, "quadratic penalty weight");
  cmd->add_option("--rounds", c.cfg.rounds, "alternating-update rounds");
  cmd->add_option("--inner-epochs", c.cfg.inner_epochs,
                  "gradient epochs per round");
  cmd->add_option("--finetune-epochs", c.cfg.finetune_epochs,
                  "noise-injection fine-tune epochs");
  cmd->add_option("--inner-lr", c.cfg.inner.lr, "inner learning rate");
  cmd->add_option("--inner-batch", c.cfg.inner.batch_size,
                  "inner minibatch size");
  cmd->add_option("--masked-fraction", c.cfg.threshold.value,
                  "target fraction of parameters to freeze");
  cmd->add_option("--abs-threshold", c.abs_threshold,
                  "absolute priority cutoff (overrides --masked-fraction)");
  cmd->add_flag("--agnostic", c.agnostic,
                "rank parameters by 1/distance only (ignore error rates)");
}

compress::CompressConfig resolve_compress(const CompressOpts& c,
                                          std::uint64_t seed) {
  compress::CompressConfig cfg = c.cfg;
  if (c.abs_threshold) {
    cfg.threshold.kind = compress::ThresholdPolicy::Kind::Absolute;
    cfg.threshold.value = *c.abs_threshold;
  }
  cfg.priority = c.agnostic ? compress::PriorityMode::NoiseAgnostic
                            : compress::PriorityMode::NoiseAware;
  cfg.inner.seed = seed;
  return cfg;
}

calib::CalibrationSnapshot load_snapshot(const std::string& path, int day) {
  std::vector<calib::CalibrationSnapshot> days =
      calib::parse_calibrations(path);
  if (day < 0 || day >= static_cast<int>(days.size()))
    throw std::invalid_argument("--day out of range for " + path);
  return days[static_cast<size_t>(day)];
}

compress::GateCostModel load_cost_model(const std::string& path) {
  if (path.empty()) return compress::GateCostModel::standard();
  return serial::cost_model_from_json(serial::read_text_file(path));
}

void print_cost(const char* tag, const compress::GateCost& c) {
  std::cout << tag << ": " << c.n1q << " one-qubit + " << c.n2q
            << " two-qubit basis gates\n";
}

// ---- synth-calib -----------------------------------------------------------

int cmd_synth_calib(const calib::DriftConfig& cfg, const std::string& out,
                    const std::string& csv) {
  std::vector<calib::CalibrationSnapshot> days = calib::synth_timeseries(cfg);
  calib::write_calibrations(out, days);
  if (!csv.empty()) calib::write_calibrations_csv(csv, days);
  std::cout << "wrote " << days.size() << " days to " << out << "\n";
  return 0;
}

// ---- train ------------------------------------------------------------------

int cmd_train(const DataOpts& data, int qubits, int blocks,
              qnn::TrainConfig tc, std::uint64_t seed,
              const std::string& noise_path, int noise_day,
              const std::string& cost_path, const std::string& out) {
  tc.cost = load_cost_model(cost_path);
  qnn::DataSplit split = load_split(data);
  qnn::QnnModel model = qnn::assemble_model(
      qubits, blocks, qcore::Coupling::ring(qubits), split.train, seed);

  std::optional<qcore::NoiseModel> noise;
  if (!noise_path.empty()) {
    noise = calib::build_noise_model(load_snapshot(noise_path, noise_day));
    tc.noise = noise;
  }
  tc.seed = seed;

  qnn::TrainResult res = qnn::train(model, split.train, tc, &split.val);
  const qcore::NoiseModel* np = noise ? &*noise : nullptr;
  std::cout << "val accuracy:  "
            << qnn::evaluate_accuracy(res.model, split.val, np, tc.cost)
            << "\ntest accuracy: "
            << qnn::evaluate_accuracy(res.model, split.test, np, tc.cost)
            << "\n";
  serial::write_text_file(out, serial::model_to_json(res.model));
  std::cout << "wrote " << out << "\n";
  return 0;
}

// ---- compress ----------------------------------------------------------------

int cmd_compress(const std::string& model_path, const DataOpts& data,
                 const std::string& snap_path, int day,
                 const CompressOpts& copts, std::uint64_t seed,
                 const std::string& cost_path, const std::string& out) {
  qnn::QnnModel model =
      serial::model_from_json(serial::read_text_file(model_path));
  qnn::DataSplit split = load_split(data);
  calib::CalibrationSnapshot snap = load_snapshot(snap_path, day);
  compress::CompressConfig cfg = resolve_compress(copts, seed);
  cfg.inner.cost = load_cost_model(cost_path);

  compress::CompressResult res =
      compress::admm_compress(model, split.train, snap, cfg);

  const std::vector<std::uint8_t> none(model.theta.size(), 0);
  print_cost("before", compress::compressed_cost(model.circuit, model.theta,
                                                 none, cfg.table,
                                                 cfg.inner.cost));
  print_cost("after ",
             compress::compressed_cost(res.model.circuit, res.model.theta,
                                       res.mask, cfg.table, cfg.inner.cost));
  qcore::NoiseModel noise = calib::build_noise_model(snap);
  std::cout << "val accuracy under snapshot noise: "
            << qnn::evaluate_accuracy(res.model, split.val, &noise,
                                      cfg.inner.cost)
            << "\n";

  serial::CompressedModel cm{res.model, res.mask, cfg.table, snap.date};
  serial::write_text_file(out, serial::compressed_to_json(cm));
  std::cout << "wrote " << out << "\n";
  return 0;
}

// ---- build-repo ---------------------------------------------------------------

int cmd_build_repo(const std::string& model_path, const DataOpts& data,
                   const std::string& calib_path, int k, double acc_req,
                   const CompressOpts& copts, std::uint64_t seed,
                   const std::string& cost_path, const std::string& out) {
  qnn::QnnModel model =
      serial::model_from_json(serial::read_text_file(model_path));
  qnn::DataSplit split = load_split(data);
  std::vector<calib::CalibrationSnapshot> days =
      calib::parse_calibrations(calib_path);
  compress::CompressConfig cfg = resolve_compress(copts, seed);
  cfg.inner.cost = load_cost_model(cost_path);

  std::vector<repo::HistoryDay> history;
  history.reserve(days.size());
  for (const auto& snap : days) {
    qcore::NoiseModel noise = calib::build_noise_model(snap);
    history.push_back({snap, qnn::evaluate_accuracy(model, split.val, &noise,
                                                    cfg.inner.cost)});
  }
  repo::Repository repo = repo::build_repository(model, history, split.train,
                                                 k, acc_req, cfg, seed);
  serial::save_repository(out, repo);
  std::cout << "repository: " << repo.entries.size()
            << " entries, matching radius " << repo.th_w << "\n";
  for (const auto& e : repo.entries)
    std::cout << "  " << e.id << ": day " << e.snapshot.date << ", mean acc "
              << e.mean_acc << (e.invalid ? " (invalid)" : "") << "\n";
  std::cout << "wrote " << out << "\n";
  return 0;
}

// ---- run-timeline ---------------------------------------------------------------

int cmd_run_timeline(const std::string& strategy_name,
                     const std::string& model_path, int qubits, int blocks,
                     int base_epochs, const DataOpts& data,
                     const std::string& offline_path,
                     const std::string& online_path, qnn::TrainConfig online_tc,
                     const CompressOpts& copts, int repo_k, double acc_req,
                     std::uint64_t seed, const std::string& cost_path,
                     const std::string& out) {
  harness::Strategy strategy = harness::strategy_from_string(strategy_name);
  compress::GateCostModel cost = load_cost_model(cost_path);

  harness::TimelineData td;
  qnn::DataSplit split = load_split(data);
  td.train = std::move(split.train);
  td.val = std::move(split.val);
  td.test = std::move(split.test);
  if (!offline_path.empty())
    td.offline = calib::parse_calibrations(offline_path);
  td.online = calib::parse_calibrations(online_path);

  if (!model_path.empty()) {
    td.base = serial::model_from_json(serial::read_text_file(model_path));
  } else {
    qnn::QnnModel fresh = qnn::assemble_model(
        qubits, blocks, qcore::Coupling::ring(qubits), td.train, seed);
    qnn::TrainConfig base_tc;
    base_tc.epochs = base_epochs;
    base_tc.seed = seed;
    base_tc.cost = cost;
    td.base = qnn::train(fresh, td.train, base_tc, &td.val).model;
  }

  harness::TimelineConfig cfg;
  cfg.online_train = online_tc;
  cfg.online_train.cost = cost;
  cfg.compress = resolve_compress(copts, seed);
  cfg.compress.inner.cost = cost;
  cfg.repo_k = repo_k;
  cfg.acc_requirement = acc_req;
  cfg.seed = seed;

  harness::TimelineResult res = harness::run_timeline(strategy, td, cfg);
  serial::write_text_file(out, serial::timeline_to_json(res));

  harness::SummaryRow row = harness::summarize(res, {0.8, 0.7, 0.5}, res);
  std::cout << harness::to_string(strategy) << ": mean accuracy "
            << row.mean_acc << " over " << res.days.size() << " days, "
            << res.total_optimizations << " optimizations, "
            << res.total_wall_seconds << " s online\n";
  std::cout << "wrote " << out << "\n";
  return 0;
}

// ---- scan-surface ---------------------------------------------------------------

int cmd_scan_surface(const std::string& model_path, const DataOpts& data,
                     int slot_i, int slot_j, int grid,
                     const std::string& noise_path, int day,
                     const std::string& cost_path, const std::string& prefix) {
  qnn::QnnModel model =
      serial::model_from_json(serial::read_text_file(model_path));
  qnn::DataSplit split = load_split(data);
  compress::GateCostModel cost = load_cost_model(cost_path);

  std::optional<qcore::NoiseModel> noise;
  if (!noise_path.empty())
    noise = calib::build_noise_model(load_snapshot(noise_path, day));

  harness::SurfaceScan scan = harness::scan_loss_surface(
      model, slot_i, slot_j, grid, split.val, noise ? &*noise : nullptr, cost);
  harness::write_grid_csv(prefix + ".noiseless.csv", scan.noiseless, grid);
  std::cout << "wrote " << prefix << ".noiseless.csv\n";
  if (scan.noisy) {
    harness::write_grid_csv(prefix + ".noisy.csv", *scan.noisy, grid);
    harness::write_grid_csv(prefix + ".diff.csv", *scan.diff, grid);
    std::cout << "wrote " << prefix << ".noisy.csv and " << prefix
              << ".diff.csv\n";
  }
  return 0;
}

// ---- report ---------------------------------------------------------------------

int cmd_report(const std::vector<std::string>& run_paths,
               const std::string& csv) {
  std::vector<harness::TimelineResult> runs;
  runs.reserve(run_paths.size());
  for (const std::string& p : run_paths)
    runs.push_back(serial::timeline_from_json(serial::read_text_file(p)));
  const harness::TimelineResult& baseline = runs.back();
  const std::vector<double> thresholds{0.8, 0.7, 0.5};

  std::vector<harness::SummaryRow> rows;
  rows.reserve(runs.size());
  for (const auto& r : runs)
    rows.push_back(harness::summarize(r, thresholds, baseline));

  std::cout << "strategy,mean_acc,vs_baseline,variance,days>0.8,days>0.7,"
               "days>0.5,optimizations\n";
  for (const auto& r : rows)
    std::cout << r.strategy << ',' << r.mean_acc << ',' << r.delta_mean << ','
              << r.variance << ',' << r.days_over[0] << ',' << r.days_over[1]
              << ',' << r.days_over[2] << ',' << r.total_optimizations
              << "\n";
  if (!csv.empty()) {
    serial::write_summary_csv(csv, rows, thresholds);
    std::cout << "wrote " << csv << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noise-adaptive quantum classifier toolkit"};
  app.require_subcommand(1);

  // synth-calib
  auto* sc = app.add_subcommand("synth-calib",
                                "generate a synthetic calibration series");
  calib::DriftConfig drift;
  std::string sc_out, sc_csv, sc_coupling = "ring";
  sc->add_option("--days", drift.n_days, "number of days");
  sc->add_option("--qubits", drift.n_qubits, "device size");
  sc->add_option("--coupling", sc_coupling, "ring | line")
      ->check(CLI::IsMember({"ring", "line"}));
  sc->add_option("--base-sq", drift.base_sq, "starting 1q error rate");
  sc->add_option("--base-tq", drift.base_tq, "starting 2q error rate");
  sc->add_option("--base-ro", drift.base_ro, "starting readout flip rate");
  sc->add_option("--walk-sq", drift.walk_sq, "1q random-walk step sigma");
  sc->add_option("--walk-tq", drift.walk_tq, "2q random-walk step sigma");
  sc->add_option("--walk-ro", drift.walk_ro, "readout random-walk step sigma");
  sc->add_option("--trend-sq", drift.trend_sq, "1q per-day drift");
  sc->add_option("--trend-tq", drift.trend_tq, "2q per-day drift");
  sc->add_option("--trend-ro", drift.trend_ro, "readout per-day drift");
  sc->add_option("--spike-prob", drift.spike_prob,
                 "chance a new spike starts each day");
  sc->add_option("--spike-min", drift.spike_min, "smallest spike height");
  sc->add_option("--spike-max", drift.spike_max, "largest spike height");
  sc->add_option("--spike-days-min", drift.spike_days_min,
                 "shortest spike duration");
  sc->add_option("--spike-days-max", drift.spike_days_max,
                 "longest spike duration");
  sc->add_flag("--spike-sq", drift.spike_sq, "spikes hit 1q errors too");
  sc->add_flag("--spike-ro", drift.spike_ro, "spikes hit readout too");
  sc->add_option("--pinned-pair", drift.pinned_pair,
                 "spike the same pair every time (index into sorted pairs)");
  sc->add_option("--seed", drift.seed, "rng seed");
  sc->add_option("--out", sc_out, "output calibration JSON")->required();
  sc->add_option("--csv", sc_csv, "also export a CSV mirror");

  // train
  auto* tr = app.add_subcommand("train", "train a classifier");
  DataOpts tr_data;
  qnn::TrainConfig tr_tc;
  int tr_qubits = 4, tr_blocks = 3, tr_day = 0;
  std::uint64_t tr_seed = 7;
  std::string tr_noise, tr_cost, tr_out;
  add_data_opts(tr, tr_data);
  add_train_opts(tr, tr_tc);
  tr->add_option("--qubits", tr_qubits, "circuit width");
  tr->add_option("--blocks", tr_blocks, "ansatz blocks");
  tr->add_option("--noise", tr_noise,
                 "calibration JSON: train with noise injection");
  tr->add_option("--day", tr_day, "day index inside --noise");
  tr->add_option("--cost-model", tr_cost, "gate cost model JSON");
  tr->add_option("--seed", tr_seed, "rng seed");
  tr->add_option("--out", tr_out, "output model JSON")->required();

  // compress
  auto* cp = app.add_subcommand("compress",
                                "noise-aware compression of a trained model");
  DataOpts cp_data;
  CompressOpts cp_opts;
  int cp_day = 0;
  std::uint64_t cp_seed = 7;
  std::string cp_model, cp_snap, cp_cost, cp_out;
  cp->add_option("--model", cp_model, "model JSON")->required();
  add_data_opts(cp, cp_data);
  cp->add_option("--snapshot", cp_snap, "calibration JSON")->required();
  cp->add_option("--day", cp_day, "day index inside --snapshot");
  add_compress_opts(cp, cp_opts);
  cp->add_option("--cost-model", cp_cost, "gate cost model JSON");
  cp->add_option("--seed", cp_seed, "rng seed");
  cp->add_option("--out", cp_out, "output compressed model JSON")->required();

  // build-repo
  auto* br = app.add_subcommand("build-repo",
                                "cluster history and compress per cluster");
  DataOpts br_data;
  CompressOpts br_opts;
  int br_k = 6;
  double br_acc = 0.5;
  std::uint64_t br_seed = 7;
  std::string br_model, br_calib, br_cost, br_out;
  br->add_option("--model", br_model, "model JSON")->required();
  add_data_opts(br, br_data);
  br->add_option("--calib", br_calib,
                 "calibration JSON (slice file.json:begin:end allowed)")
      ->required();
  br->add_option("--k", br_k, "cluster count");
  br->add_option("--acc-requirement", br_acc, "invalid-entry accuracy bar");
  add_compress_opts(br, br_opts);
  br->add_option("--cost-model", br_cost, "gate cost model JSON");
  br->add_option("--seed", br_seed, "rng seed");
  br->add_option("--out", br_out, "output repository JSON")->required();

  // run-timeline
  auto* rt = app.add_subcommand("run-timeline",
                                "drive one strategy across the online days");
  DataOpts rt_data;
  CompressOpts rt_opts;
  qnn::TrainConfig rt_tc;
  rt_tc.epochs = 10;
  int rt_qubits = 4, rt_blocks = 3, rt_base_epochs = 30, rt_repo_k = 6;
  double rt_acc = 0.5;
  std::uint64_t rt_seed = 7;
  std::string rt_strategy, rt_model, rt_offline, rt_online, rt_cost, rt_out;
  rt->add_option("--strategy", rt_strategy,
                 "Baseline | NoiseAwareTrainOnce | NoiseAwareTrainEveryday | "
                 "OneTimeCompression | QuCADNoOffline | QuCAD | "
                 "CompressEveryday")
      ->required();
  rt->add_option("--model", rt_model,
                 "pre-trained model JSON (otherwise trains one)");
  rt->add_option("--qubits", rt_qubits, "circuit width (fresh model)");
  rt->add_option("--blocks", rt_blocks, "ansatz blocks (fresh model)");
  rt->add_option("--base-epochs", rt_base_epochs,
                 "noiseless training epochs (fresh model)");
  add_data_opts(rt, rt_data);
  rt->add_option("--offline", rt_offline,
                 "offline calibration slice file.json:begin:end");
  rt->add_option("--online", rt_online,
                 "online calibration slice file.json:begin:end")
      ->required();
  add_train_opts(rt, rt_tc);
  add_compress_opts(rt, rt_opts);
  rt->add_option("--repo-k", rt_repo_k, "offline cluster count");
  rt->add_option("--acc-requirement", rt_acc, "invalid-entry accuracy bar");
  rt->add_option("--cost-model", rt_cost, "gate cost model JSON");
  rt->add_option("--seed", rt_seed, "rng seed");
  rt->add_option("--out", rt_out, "output timeline JSON")->required();

  // scan-surface
  auto* ss = app.add_subcommand("scan-surface",
                                "loss over a 2-parameter angle lattice");
  DataOpts ss_data;
  int ss_i = 0, ss_j = 1, ss_grid = 64, ss_day = 0;
  std::string ss_model, ss_noise, ss_cost, ss_prefix;
  std::uint64_t ss_seed = 7;
  ss->add_option("--model", ss_model, "model JSON")->required();
  add_data_opts(ss, ss_data);
  ss->add_option("--slot-i", ss_i, "first parameter slot");
  ss->add_option("--slot-j", ss_j, "second parameter slot");
  ss->add_option("--grid", ss_grid, "lattice steps per axis");
  ss->add_option("--noise", ss_noise,
                 "calibration JSON: also emit noisy and difference grids");
  ss->add_option("--day", ss_day, "day index inside --noise");
  ss->add_option("--cost-model", ss_cost, "gate cost model JSON");
  ss->add_option("--seed", ss_seed, "rng seed (unused; accepted for scripts)");
  ss->add_option("--out-prefix", ss_prefix, "output CSV prefix")->required();

  // report
  auto* rp = app.add_subcommand(
      "report", "tabulate timeline runs (last file is the baseline)");
  std::vector<std::string> rp_runs;
  std::string rp_csv;
  rp->add_option("runs", rp_runs, "timeline JSON files")
      ->required()
      ->expected(-1);
  rp->add_option("--csv", rp_csv, "write the table as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (sc->parsed()) {
      if (sc_coupling == "line")
        drift.coupling = qcore::Coupling::line(drift.n_qubits);
      return cmd_synth_calib(drift, sc_out, sc_csv);
    }
    if (tr->parsed())
      return cmd_train(tr_data, tr_qubits, tr_blocks, tr_tc, tr_seed,
                       tr_noise, tr_day, tr_cost, tr_out);
    if (cp->parsed())
      return cmd_compress(cp_model, cp_data, cp_snap, cp_day, cp_opts,
                          cp_seed, cp_cost, cp_out);
    if (br->parsed())
      return cmd_build_repo(br_model, br_data, br_calib, br_k, br_acc,
                            br_opts, br_seed, br_cost, br_out);
    if (rt->parsed())
      return cmd_run_timeline(rt_strategy, rt_model, rt_qubits, rt_blocks,
                              rt_base_epochs, rt_data, rt_offline, rt_online,
                              rt_tc, rt_opts, rt_repo_k, rt_acc, rt_seed,
                              rt_cost, rt_out);
    if (ss->parsed())
      return cmd_scan_surface(ss_model, ss_data, ss_i, ss_j, ss_grid,
                              ss_noise, ss_day, ss_cost, ss_prefix);
    if (rp->parsed()) return cmd_report(rp_runs, rp_csv);
  } catch (const qucad::io_error& e) {
    std::cerr << "file error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
