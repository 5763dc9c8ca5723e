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

#include "qss/qcore/circuit.h"

namespace qss {

/// Circuit JSON: {"n_qubits", "n_clbits", "ops": [...]} with op kinds
/// "gate", "measure", "reset" and "cond_gate". Qubit indices are 1-based.
/// A cond_gate carries either "clbit" (one bit) or "clbits" (register, first
/// entry most significant) plus "value".
nlohmann::json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const nlohmann::json& j);

std::string circuit_to_json_string(const Circuit& circuit, int indent = 2);
Circuit circuit_from_json_string(const std::string& text);

}  // namespace qss
