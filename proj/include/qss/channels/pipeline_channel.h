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

#include <optional>

#include "qss/channels/channel.h"
#include "qss/codes/pipeline.h"

namespace qss {

/// Choi matrix of secret -> encode -> erase -> decode, with optional
/// two-qubit depolarizing noise after every two-qubit gate. The secret space
/// has 2 dimensions, or 4 (two qubits) for the qutrit scheme.
Matrix pipeline_choi(const CodeSpec& code, const PipelineSpec& spec, std::optional<double> gate_noise = std::nullopt);

/// The same map as a Kraus channel from the Choi eigendecomposition.
Channel pipeline_channel(const CodeSpec& code, const PipelineSpec& spec, std::optional<double> gate_noise = std::nullopt);

/// Number of two-qubit gates the pipeline executes along a single branch
/// (conditional gates counted as if they fire).
int pipeline_two_qubit_gates(const CodeSpec& code, const PipelineSpec& spec);

}  // namespace qss
