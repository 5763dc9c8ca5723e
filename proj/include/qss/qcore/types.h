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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qss {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Qubit indices are 1-based throughout the library. Qubit 1 is the leftmost
/// letter of a Pauli string and the most significant bit of a basis index or
/// bitstring, so for n qubits qubit q lives at bit position (n - q).
using QubitList = std::vector<int>;

inline constexpr int kMaxQubits = 14;

inline int bit_position(int n_qubits, int qubit) { return n_qubits - qubit; }

}  // namespace qss
