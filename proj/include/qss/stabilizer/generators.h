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
#include <vector>

#include "qss/qcore/circuit.h"
#include "qss/stabilizer/pauli.h"

namespace qss {

/// Stabilizer generators plus logical operators of a one-qubit code.
struct GeneratorSet {
  std::vector<PauliString> generators;
  PauliString logical_z;
  PauliString logical_x;

  /// Validates equal lengths, mutual commutation of the generators,
  /// commutation of both logicals with every generator, and anticommutation
  /// of logical_x with logical_z.
  static GeneratorSet make(std::vector<PauliString> generators, PauliString logical_z, PauliString logical_x);

  int n_qubits() const { return logical_z.n_qubits(); }
};

/// The images U Z_r U^dagger of the syndrome registers r, together with
/// U Z_s U^dagger and U X_s U^dagger for the secret register s.
GeneratorSet circuit_generators(const Circuit& encoding, int secret_register, const QubitList& syndrome_registers);

/// b[i] = 1 iff `error` anticommutes with generator i.
std::vector<int> syndrome_of(const PauliString& error, const GeneratorSet& gens);
std::string syndrome_string(const std::vector<int>& bits);

struct EncodingCheck {
  std::string label;
  PauliString expected;
  PauliString actual;
  bool ok;
};

struct EncodingReport {
  std::vector<EncodingCheck> checks;
  int generator_mismatches = 0;
  bool logical_ok = true;

  bool ok() const { return generator_mismatches == 0 && logical_ok; }
};

/// Checks U Z_{r_i} U^dagger = g_i for each syndrome register r_i and
/// U Z_s U^dagger = logical Z, signs included. The default registers are
/// r_i = i and s = n.
EncodingReport verify_encoding(const Circuit& encoding, const GeneratorSet& gens);
EncodingReport verify_encoding(const Circuit& encoding, const GeneratorSet& gens, int secret_register,
                               const QubitList& syndrome_registers);

/// True if the two sets generate the same stabilizer group (signs included).
bool same_stabilizer_group(const std::vector<PauliString>& a, const std::vector<PauliString>& b);

}  // namespace qss
