// Copyright 2026 The QSS Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qss/channels/noise.h"

#include <fstream>
#include <stdexcept>

namespace qss {
namespace {

double probability(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return 0.0;
  const double v = j.at(key).get<double>();
  if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument(std::string(key) + " must lie in [0, 1]");
  return v;
}

}  // namespace

NoiseModel noise_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("noise config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (key != "two_qubit_depolarizing" && key != "readout") throw std::invalid_argument("unknown noise key '" + key + "'");
  }
  NoiseModel m;
  m.two_qubit_depolarizing = probability(j, "two_qubit_depolarizing");
  if (j.contains("readout")) {
    const auto& r = j.at("readout");
    m.readout_p01 = probability(r, "p01");
    m.readout_p10 = probability(r, "p10");
  }
  return m;
}

nlohmann::json noise_to_json(const NoiseModel& model) {
  return {{"two_qubit_depolarizing", model.two_qubit_depolarizing},
          {"readout", {{"p01", model.readout_p01}, {"p10", model.readout_p10}}}};
}

NoiseModel load_noise_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open noise config '" + path + "'");
  return noise_from_json(nlohmann::json::parse(in));
}

void depolarize(Matrix& op, int n_qubits, const QubitList& qubits, double p) {
  if (p == 0.0) return;
  Eigen::Index mask = 0;
  for (int q : qubits) mask |= Eigen::Index{1} << bit_position(n_qubits, q);
  const double share = 1.0 / static_cast<double>(Eigen::Index{1} << qubits.size());
  // Partial trace over the masked bits, indexed by the unmasked row/column.
  Matrix reduced = Matrix::Zero(op.rows(), op.cols());
  for (Eigen::Index c = 0; c < op.cols(); ++c) {
    for (Eigen::Index r = 0; r < op.rows(); ++r) {
      if ((r & mask) == (c & mask)) reduced(r & ~mask, c & ~mask) += op(r, c);
    }
  }
  op *= (1.0 - p);
  for (Eigen::Index c = 0; c < op.cols(); ++c) {
    for (Eigen::Index r = 0; r < op.rows(); ++r) {
      if ((r & mask) == (c & mask)) op(r, c) += p * share * reduced(r & ~mask, c & ~mask);
    }
  }
}

GateHook make_noise_hook(const NoiseModel& model) {
  const double p = model.two_qubit_depolarizing;
  if (p == 0.0) return {};
  return [p](Matrix& op, int n, const GateSpec& g) {
    if (g.targets.size() == 2) depolarize(op, n, g.targets, p);
  };
}

}  // namespace qss
