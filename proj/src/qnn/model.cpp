// SPDX-License-Identifier: Apache-2.0
#include "qucad/qnn/model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "qucad/common/angles.hpp"

namespace qucad::qnn {

using qcore::Gate;
using qcore::GateKind;
using qcore::ParamCircuit;

EncodingSpec EncodingSpec::fit(int n_qubits, const Dataset& train) {
  train.validate();
  EncodingSpec e;
  e.n_qubits = n_qubits;
  e.n_features = static_cast<int>(train.n_features());
  feature_ranges(train, e.lo, e.hi);
  e.validate();
  return e;
}

GateKind EncodingSpec::axis_of_layer(int layer) const {
  constexpr GateKind cycle[3] = {GateKind::RY, GateKind::RZ, GateKind::RX};
  return cycle[layer % 3];
}

double EncodingSpec::angle(int feature, double value) const {
  const size_t j = static_cast<size_t>(feature);
  const double span = hi[j] - lo[j];
  if (span <= 0.0) return 0.0;  // constant feature carries no information
  const double t = std::clamp((value - lo[j]) / span, 0.0, 1.0);
  return t * std::numbers::pi;
}

std::vector<Gate> EncodingSpec::template_gates() const {
  std::vector<Gate> gates;
  gates.reserve(static_cast<size_t>(n_features));
  for (int f = 0; f < n_features; ++f) {
    const int qubit = f % n_qubits;
    const int layer = f / n_qubits;
    gates.push_back(qcore::fixed_gate(axis_of_layer(layer), qubit, 0.0));
  }
  return gates;
}

void EncodingSpec::validate() const {
  if (n_qubits <= 0 || n_features <= 0)
    throw std::invalid_argument("encoding needs qubits and features");
  if (lo.size() != static_cast<size_t>(n_features) || hi.size() != lo.size())
    throw std::invalid_argument("encoding scale length != n_features");
}

void QnnModel::validate() const {
  circuit.validate();
  encoding.validate();
  if (static_cast<int>(theta.size()) != circuit.n_params)
    throw std::invalid_argument("theta length != circuit n_params");
  if (readout.empty()) throw std::invalid_argument("model needs readout qubits");
  for (size_t i = 0; i < readout.size(); ++i) {
    if (readout[i] < 0 || readout[i] >= circuit.n_qubits)
      throw std::invalid_argument("readout qubit out of range");
    for (size_t j = i + 1; j < readout.size(); ++j)
      if (readout[i] == readout[j])
        throw std::invalid_argument("duplicate readout qubit");
  }
}

ParamCircuit QnnModel::encoded(const std::vector<double>& features) const {
  if (static_cast<int>(features.size()) != encoding.n_features)
    throw std::invalid_argument("feature dimension != encoding");
  ParamCircuit c = circuit;
  for (int f = 0; f < encoding.n_features; ++f)
    c.gates[static_cast<size_t>(f)].angle =
        encoding.angle(f, features[static_cast<size_t>(f)]);
  return c;
}

ParamCircuit build_vqc(int n_qubits, int n_blocks,
                       const qcore::Coupling& coupling) {
  if (n_qubits < 2) throw std::invalid_argument("ansatz needs >= 2 qubits");
  if (n_blocks < 0) throw std::invalid_argument("negative block count");
  ParamCircuit c;
  c.n_qubits = n_qubits;
  c.coupling = coupling;
  int slot = 0;
  auto layer_1q = [&](GateKind kind) {
    for (int q = 0; q < n_qubits; ++q)
      c.gates.push_back(qcore::slot_gate(kind, q, slot++));
  };
  auto ring_2q = [&](GateKind kind) {
    for (int q = 0; q < n_qubits; ++q)
      c.gates.push_back(qcore::slot_gate(kind, q, (q + 1) % n_qubits, slot++));
  };
  for (int b = 0; b < n_blocks; ++b) {
    layer_1q(GateKind::RY);
    ring_2q(GateKind::CRY);
    layer_1q(GateKind::RY);
    layer_1q(GateKind::RX);
    ring_2q(GateKind::CRX);
    layer_1q(GateKind::RX);
    layer_1q(GateKind::RZ);
    ring_2q(GateKind::CRZ);
    layer_1q(GateKind::RZ);
    ring_2q(GateKind::CRZ);
  }
  c.n_params = slot;
  c.validate();
  return c;
}

QnnModel assemble_model(int n_qubits, int n_blocks,
                        const qcore::Coupling& coupling, const Dataset& train,
                        std::uint64_t seed) {
  QnnModel m;
  m.encoding = EncodingSpec::fit(n_qubits, train);
  const ParamCircuit ansatz = build_vqc(n_qubits, n_blocks, coupling);
  m.circuit.n_qubits = n_qubits;
  m.circuit.n_params = ansatz.n_params;
  m.circuit.coupling = coupling;
  m.circuit.gates = m.encoding.template_gates();
  m.circuit.gates.insert(m.circuit.gates.end(), ansatz.gates.begin(),
                         ansatz.gates.end());
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uni(0.0, two_pi);
  m.theta.resize(static_cast<size_t>(ansatz.n_params));
  for (double& t : m.theta) t = uni(rng);
  if (train.n_classes > n_qubits)
    throw std::invalid_argument("more classes than readout qubits available");
  for (int q = 0; q < train.n_classes; ++q) m.readout.push_back(q);
  m.validate();
  return m;
}

std::vector<double> forward(const QnnModel& model,
                            const std::vector<double>& features,
                            const qcore::NoiseModel* noise,
                            const compress::GateCostModel& cost) {
  const ParamCircuit c = model.encoded(features);
  std::vector<double> z;
  if (!noise) {
    const qcore::StateVector psi = qcore::simulate_noiseless(c, model.theta);
    z = qcore::z_expectations(psi);
  } else {
    const qcore::DensityMatrix rho =
        qcore::simulate_noisy(c, model.theta, *noise, cost);
    z = qcore::measure_z_expectations(rho, *noise);
  }
  std::vector<double> logits;
  logits.reserve(model.readout.size());
  for (int q : model.readout) logits.push_back(z[static_cast<size_t>(q)]);
  return logits;
}

double loss(const std::vector<double>& logits, int label) {
  if (label < 0 || static_cast<size_t>(label) >= logits.size())
    throw std::invalid_argument("label outside logits range");
  const double mx = *std::max_element(logits.begin(), logits.end());
  double denom = 0.0;
  for (double l : logits) denom += std::exp(l - mx);
  return std::log(denom) - (logits[static_cast<size_t>(label)] - mx);
}

std::vector<double> loss_grad_logits(const std::vector<double>& logits,
                                     int label) {
  const double mx = *std::max_element(logits.begin(), logits.end());
  double denom = 0.0;
  std::vector<double> g(logits.size());
  for (size_t i = 0; i < logits.size(); ++i) {
    g[i] = std::exp(logits[i] - mx);
    denom += g[i];
  }
  for (double& v : g) v /= denom;
  g[static_cast<size_t>(label)] -= 1.0;
  return g;
}

double evaluate_accuracy(const QnnModel& model, const Dataset& data,
                         const qcore::NoiseModel* noise,
                         const compress::GateCostModel& cost) {
  data.validate();
  size_t hits = 0;
  for (size_t i = 0; i < data.size(); ++i) {
    const std::vector<double> logits = forward(model, data.features[i], noise, cost);
    // Ties break toward the lowest class index.
    size_t best = 0;
    for (size_t c = 1; c < logits.size(); ++c)
      if (logits[c] > logits[best]) best = c;
    if (static_cast<int>(best) == data.labels[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(data.size());
}

double mean_loss(const QnnModel& model, const Dataset& data,
                 const qcore::NoiseModel* noise,
                 const compress::GateCostModel& cost) {
  data.validate();
  double total = 0.0;
  for (size_t i = 0; i < data.size(); ++i)
    total += loss(forward(model, data.features[i], noise, cost), data.labels[i]);
  return total / static_cast<double>(data.size());
}

}  // namespace qucad::qnn
