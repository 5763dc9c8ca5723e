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

#include <cstdint>
#include <string>
#include <string_view>

#include "qss/qcore/types.h"

namespace qss {

/// Signed Pauli operator i^phase * P_1 (x) ... (x) P_n with letters in
/// {I, X, Y, Z}; Y is the Hermitian Y, not XZ. Up to 64 qubits.
class PauliString {
 public:
  explicit PauliString(int n_qubits = 0);

  /// Text form: optional phase prefix ("+", "-", "i", "+i", "-i") followed by
  /// letters, qubit 1 first. "I" may also be written as "_".
  static PauliString parse(std::string_view text);
  static PauliString single(int n_qubits, int qubit, char letter);

  int n_qubits() const { return n_; }
  /// Exponent k of the i^k prefactor, in [0, 3].
  int phase() const { return phase_; }
  char letter(int qubit) const;
  uint64_t x_mask() const { return x_; }
  uint64_t z_mask() const { return z_; }

  PauliString& set_letter(int qubit, char letter);
  PauliString& set_phase(int k);

  bool is_identity() const { return x_ == 0 && z_ == 0; }
  int weight() const;
  /// Letters only, without the phase prefix.
  std::string letters() const;
  std::string str() const;

  PauliString operator*(const PauliString& other) const;
  PauliString adjoint() const;
  bool commutes_with(const PauliString& other) const;
  bool equal_up_to_phase(const PauliString& other) const;

  /// Tensor of the letters on `qubits` (in that order), phase +1.
  PauliString restrict_to(const QubitList& qubits) const;
  /// Places this operator on `qubits` of an n-qubit register.
  PauliString embed(int n_qubits, const QubitList& qubits) const;

  Matrix matrix() const;

  bool operator==(const PauliString&) const = default;

 private:
  void check_qubit(int qubit) const;

  int n_;
  int phase_;
  uint64_t x_;
  uint64_t z_;
};

}  // namespace qss
