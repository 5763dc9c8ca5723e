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

#include "qss/channels/pipeline_channel.h"

#include "qss/channels/noise.h"

namespace qss {

Matrix pipeline_choi(const CodeSpec& code, const PipelineSpec& spec, std::optional<double> gate_noise) {
  NoiseModel model;
  if (gate_noise) model.two_qubit_depolarizing = *gate_noise;
  const GateHook hook = make_noise_hook(model);
  const int n_in = static_cast<int>(code.secret_qubits.size());
  return choi_of_map([&](const Matrix& m) { return run_pipeline(code, m, spec, hook); }, n_in);
}

Channel pipeline_channel(const CodeSpec& code, const PipelineSpec& spec, std::optional<double> gate_noise) {
  const int n = static_cast<int>(code.secret_qubits.size());
  return channel_from_choi(pipeline_choi(code, spec, gate_noise), n, n);
}

int pipeline_two_qubit_gates(const CodeSpec& code, const PipelineSpec& spec) {
  return pipeline_circuit(code, spec).two_qubit_gate_count();
}

}  // namespace qss
