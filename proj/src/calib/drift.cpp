// SPDX-License-Identifier: Apache-2.0
#include "qucad/calib/drift.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qucad::calib {

namespace {

constexpr double rate_lo = 1e-5;
constexpr double rate_hi = 0.5;

double clip(double v) { return std::clamp(v, rate_lo, rate_hi); }

double step(std::mt19937_64& rng, double sigma) {
  if (sigma <= 0.0) return 0.0;
  std::normal_distribution<double> d(0.0, sigma);
  return d(rng);
}

enum class Channel { Sq, Tq, Ro };

struct Spike {
  Channel channel;
  int target;  // qubit index, or index into the sorted pair list
  double magnitude;
  int days_left;
};

}  // namespace

void DriftConfig::validate() const {
  if (n_days < 1 || n_qubits < 1)
    throw std::invalid_argument("need >= 1 day and qubit");
  auto rate_ok = [](double r) { return r >= 0.0 && r <= rate_hi; };
  if (!rate_ok(base_sq) || !rate_ok(base_tq) || !rate_ok(base_ro))
    throw std::invalid_argument("base rates outside [0, 0.5]");
  if (walk_sq < 0 || walk_tq < 0 || walk_ro < 0)
    throw std::invalid_argument("negative walk sigma");
  if (spike_prob < 0.0 || spike_prob > 1.0)
    throw std::invalid_argument("spike_prob outside [0,1]");
  if (spike_prob > 0.0) {
    if (!(spike_tq || spike_sq || spike_ro))
      throw std::invalid_argument("spikes enabled but no channel selected");
    if (spike_min < 0.0 || spike_max < spike_min)
      throw std::invalid_argument("bad spike magnitude range");
    if (spike_days_min < 1 || spike_days_max < spike_days_min)
      throw std::invalid_argument("bad spike duration range");
  }
}

std::vector<CalibrationSnapshot> synth_timeseries(const DriftConfig& cfg) {
  cfg.validate();
  const qcore::Coupling coupling =
      cfg.coupling.empty() ? qcore::Coupling::ring(cfg.n_qubits) : cfg.coupling;
  const std::vector<qcore::QubitPair> pairs(coupling.pairs.begin(),
                                            coupling.pairs.end());
  if (cfg.pinned_pair >= static_cast<int>(pairs.size()))
    throw std::invalid_argument("pinned_pair index out of range");

  std::mt19937_64 rng(cfg.seed);
  const size_t nq = static_cast<size_t>(cfg.n_qubits);
  std::vector<double> sq(nq, cfg.base_sq);
  std::vector<double> tq(pairs.size(), cfg.base_tq);
  std::vector<std::array<double, 2>> ro(nq, {cfg.base_ro, cfg.base_ro});
  std::vector<Spike> spikes;

  std::vector<Channel> enabled;
  if (cfg.spike_tq) enabled.push_back(Channel::Tq);
  if (cfg.spike_sq) enabled.push_back(Channel::Sq);
  if (cfg.spike_ro) enabled.push_back(Channel::Ro);

  std::vector<CalibrationSnapshot> days;
  days.reserve(static_cast<size_t>(cfg.n_days));
  for (int day = 0; day < cfg.n_days; ++day) {
    if (day > 0) {
      // Fixed draw order: sq walks, tq walks, ro walks, spike roll.
      for (double& v : sq) v = clip(v + cfg.trend_sq + step(rng, cfg.walk_sq));
      for (double& v : tq) v = clip(v + cfg.trend_tq + step(rng, cfg.walk_tq));
      for (auto& r : ro) {
        r[0] = clip(r[0] + cfg.trend_ro + step(rng, cfg.walk_ro));
        r[1] = clip(r[1] + cfg.trend_ro + step(rng, cfg.walk_ro));
      }
    }
    if (cfg.spike_prob > 0.0 && !enabled.empty()) {
      std::uniform_real_distribution<double> u01(0.0, 1.0);
      if (u01(rng) < cfg.spike_prob) {
        Spike s;
        s.channel = enabled.size() == 1
                        ? enabled[0]
                        : enabled[std::uniform_int_distribution<size_t>(
                              0, enabled.size() - 1)(rng)];
        if (s.channel == Channel::Tq && cfg.pinned_pair >= 0) {
          s.target = cfg.pinned_pair;
        } else {
          const size_t hi = s.channel == Channel::Tq ? pairs.size() : nq;
          s.target = static_cast<int>(
              std::uniform_int_distribution<size_t>(0, hi - 1)(rng));
        }
        s.magnitude = std::uniform_real_distribution<double>(
            cfg.spike_min, cfg.spike_max)(rng);
        s.days_left = std::uniform_int_distribution<int>(
            cfg.spike_days_min, cfg.spike_days_max)(rng);
        spikes.push_back(s);
      }
    }

    CalibrationSnapshot snap;
    snap.date = cfg.date_prefix + (day < 10 ? "00" : day < 100 ? "0" : "") +
                std::to_string(day);
    snap.n_qubits = cfg.n_qubits;
    snap.sq_error = sq;
    snap.ro_error = ro;
    for (size_t i = 0; i < pairs.size(); ++i) snap.tq_error[pairs[i]] = tq[i];
    for (Spike& s : spikes) {
      if (s.days_left <= 0) continue;
      switch (s.channel) {
        case Channel::Sq:
          snap.sq_error[static_cast<size_t>(s.target)] =
              clip(snap.sq_error[static_cast<size_t>(s.target)] + s.magnitude);
          break;
        case Channel::Tq:
          snap.tq_error[pairs[static_cast<size_t>(s.target)]] = clip(
              snap.tq_error[pairs[static_cast<size_t>(s.target)]] + s.magnitude);
          break;
        case Channel::Ro: {
          auto& r = snap.ro_error[static_cast<size_t>(s.target)];
          r[0] = clip(r[0] + s.magnitude);
          r[1] = clip(r[1] + s.magnitude);
          break;
        }
      }
      --s.days_left;
    }
    std::erase_if(spikes, [](const Spike& s) { return s.days_left <= 0; });
    snap.validate();
    days.push_back(std::move(snap));
  }
  return days;
}

}  // namespace qucad::calib
