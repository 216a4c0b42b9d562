// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "qucad/qcore/simulate.hpp"
#include "qucad/qnn/dataset.hpp"

namespace qucad::qnn {

// Angle encoding: feature j is written as a fixed rotation on qubit
// j % n_qubits in layer j / n_qubits; the rotation axis cycles RY, RZ, RX
// per layer. Values are min-max scaled into [0, pi].
struct EncodingSpec {
  int n_qubits = 0;
  int n_features = 0;
  std::vector<double> lo, hi;  // per-feature scale, from the training data

  static EncodingSpec fit(int n_qubits, const Dataset& train);

  int n_layers() const {
    return n_features == 0 ? 0 : (n_features + n_qubits - 1) / n_qubits;
  }
  qcore::GateKind axis_of_layer(int layer) const;
  double angle(int feature, double value) const;

  // Fixed-angle gates (angle 0 placeholder) in feature order.
  std::vector<qcore::Gate> template_gates() const;

  void validate() const;
};

struct QnnModel {
  qcore::ParamCircuit circuit;  // encoding gates first, then the ansatz
  std::vector<double> theta;
  EncodingSpec encoding;
  std::vector<int> readout;  // one qubit per class

  void validate() const;

  // Circuit copy with the encoding angles resolved for one sample.
  qcore::ParamCircuit encoded(const std::vector<double>& features) const;
};

// Ansatz block: [n RY, n CRY, n RY, n RX, n CRX, n RX, n RZ, n CRZ, n RZ,
// n CRZ], controlled gates on the ring q_i -> q_(i+1 mod n), one fresh slot
// per gate.
qcore::ParamCircuit build_vqc(int n_qubits, int n_blocks,
                              const qcore::Coupling& coupling);

// Assembles encoding template + ansatz; theta drawn uniformly from
// [0, 2*pi) with the given seed.
QnnModel assemble_model(int n_qubits, int n_blocks,
                        const qcore::Coupling& coupling, const Dataset& train,
                        std::uint64_t seed);

// <Z> of each readout qubit. Statevector path when noise is null, density
// matrix with channels and readout confusion otherwise.
std::vector<double> forward(const QnnModel& model,
                            const std::vector<double>& features,
                            const qcore::NoiseModel* noise,
                            const compress::GateCostModel& cost);

// Softmax cross-entropy.
double loss(const std::vector<double>& logits, int label);

// dLoss/dlogits = softmax(logits) - onehot(label).
std::vector<double> loss_grad_logits(const std::vector<double>& logits,
                                     int label);

double evaluate_accuracy(const QnnModel& model, const Dataset& data,
                         const qcore::NoiseModel* noise,
                         const compress::GateCostModel& cost);

// Mean loss over a dataset (used by the surface scanner and ADMM).
double mean_loss(const QnnModel& model, const Dataset& data,
                 const qcore::NoiseModel* noise,
                 const compress::GateCostModel& cost);

}  // namespace qucad::qnn
