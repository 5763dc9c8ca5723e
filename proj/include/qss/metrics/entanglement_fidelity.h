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

#include "qss/channels/channel.h"

namespace qss {

/// |Phi+_d> = sum_{i<d} |i>|i> / sqrt(d) on 2 n qubits, where the i-th
/// level is basis index i of an n-qubit register (d = 3 uses |00>, |01>,
/// |10>).
StateVector phi_plus(int d, int n_qubits);

/// (id (x) N)(|Phi+_d><Phi+_d|), reference first.
DensityMatrix phi_plus_output(const Channel& channel, int d);

/// F_e = <Phi+_d|(id (x) N)(|Phi+_d><Phi+_d|)|Phi+_d>
///     = sum_k |sum_{i<d} <i|K_k|i>|^2 / d^2.
/// d must be 2 for one-qubit channels and 3 for two-qubit (embedded) ones.
double entanglement_fidelity(const Channel& channel, int d);

/// Output population outside the first d levels for the |Phi+_d> input.
double leakage(const Channel& channel, int d);

}  // namespace qss
