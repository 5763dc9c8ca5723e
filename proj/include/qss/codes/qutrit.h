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

#include <string_view>

#include "qss/qcore/circuit.h"
#include "qss/qcore/state.h"

namespace qss {

/// Qutrit k of the ((2,3)) scheme lives on qubits (2k-1, 2k) with
/// |0> = |00>, |1> = |01>, |2> = |10>.
enum class QutritPair { k12, k23, k31 };

std::string_view qutrit_pair_name(QutritPair p);
/// Accepts "12", "23", "31".
QutritPair parse_qutrit_pair(std::string_view label);
/// The qubits of the qutrit not in the pair, which are the erased share.
QubitList qutrit_pair_erased(QutritPair p);
/// The qubits of the first qutrit of the pair, where recovery leaves the secret.
QubitList qutrit_pair_output(QutritPair p);
/// Pair whose shares survive erasure of `erased`; throws if `erased` is not
/// exactly one whole qutrit.
QutritPair qutrit_pair_for_erasure(const QubitList& erased);

/// Appends target += source (mod 3) for qutrits given as 1-based indices.
void append_qutrit_add(Circuit& c, int source, int target);

/// Six-qubit encoder taking |s>|0>|0> to sum_k |k, k+s, k+2s> / sqrt(3).
Circuit qutrit_encoding_circuit();

/// R_ij: qutrit j += qutrit i, then qutrit i += qutrit j.
Circuit qutrit_recovery_circuit(QutritPair p);

/// Applies R_ij to a six-qubit state.
StateVector qutrit_recover(const StateVector& state, QutritPair p);
DensityMatrix qutrit_recover(const DensityMatrix& state, QutritPair p);

}  // namespace qss
