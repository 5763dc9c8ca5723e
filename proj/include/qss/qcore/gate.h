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
#include <string_view>
#include <vector>

#include "qss/qcore/types.h"

namespace qss {

enum class GateKind { kH, kX, kY, kZ, kS, kSdg, kSX, kRX, kRY, kRZ, kCNOT, kCZ, kSWAP };

/// A gate application: kind, rotation angles in radians, and 1-based targets.
/// For CNOT the targets are (control, target).
struct GateSpec {
  GateKind kind;
  std::vector<double> params;
  QubitList targets;

  /// Validates parameter arity, target arity and target distinctness.
  static GateSpec make(GateKind kind, QubitList targets, std::vector<double> params = {});

  bool operator==(const GateSpec&) const = default;
};

int gate_qubit_count(GateKind kind);
int gate_param_count(GateKind kind);
bool is_clifford(GateKind kind);

/// Lower-case short name used in the circuit JSON ("h", "cx", "sdg", ...).
std::string_view gate_name(GateKind kind);
/// Accepts the short names plus a few aliases ("cnot", "sxdg" is rejected).
GateKind parse_gate_name(std::string_view name);

/// Unitary of the gate on its own targets; the first target is the most
/// significant bit of the matrix index.
Matrix gate_matrix(const GateSpec& gate);

/// Inverse gate (same targets).
GateSpec inverse(const GateSpec& gate);

std::string to_string(const GateSpec& gate);

}  // namespace qss
