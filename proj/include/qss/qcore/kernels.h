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

#include <vector>

#include "qss/qcore/types.h"

namespace qss::kernels {

/// Applies the 2^k x 2^k matrix `m` to the amplitudes in `data` (length
/// 2^total_bits) on the given bit positions. positions[0] is the most
/// significant bit of the matrix index.
void apply_matrix(Complex* data, int total_bits, const std::vector<int>& positions, const Matrix& m);

/// op <- U op U^dagger where U acts on the listed qubits of an n-qubit operator.
void conjugate(Matrix& op, int n_qubits, const QubitList& qubits, const Matrix& u);

/// op <- sum_k K_k op K_k^dagger on the listed qubits.
void apply_kraus(Matrix& op, int n_qubits, const QubitList& qubits, const std::vector<Matrix>& kraus);

/// Zeroes every entry whose row or column index has `qubit` different from `bit`.
void project(Matrix& op, int n_qubits, int qubit, int bit);

/// The reset channel |0><0| . |0><0| + |0><1| . |1><0| on one qubit.
void reset(Matrix& op, int n_qubits, int qubit);

}  // namespace qss::kernels
