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

#pragma once

#include <string>

#include <json.hpp>

#include "qss/qcore/simulator.h"

namespace qss {

/// Noise config: {"two_qubit_depolarizing": p, "readout": {"p01": a, "p10": b}}.
/// p01 = P(read 1 | prepared 0), applied identically to every measured qubit.
struct NoiseModel {
  double two_qubit_depolarizing = 0.0;
  double readout_p01 = 0.0;
  double readout_p10 = 0.0;

  bool noiseless() const { return two_qubit_depolarizing == 0.0 && readout_p01 == 0.0 && readout_p10 == 0.0; }
  bool operator==(const NoiseModel&) const = default;
};

NoiseModel noise_from_json(const nlohmann::json& j);
nlohmann::json noise_to_json(const NoiseModel& model);
NoiseModel load_noise_file(const std::string& path);

/// In-place depolarizing of `qubits`: op -> (1-p) op + p (I/2^k (x) tr_qubits op).
void depolarize(Matrix& op, int n_qubits, const QubitList& qubits, double p);

/// Hook applying two-qubit depolarizing noise after every two-qubit gate;
/// empty when the strength is zero.
GateHook make_noise_hook(const NoiseModel& model);

}  // namespace qss
