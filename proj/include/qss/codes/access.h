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

#include "qss/codes/code_spec.h"
#include "qss/qcore/state.h"

namespace qss {

/// Fixed probe secrets used for privacy tests: for qubits |0>, |1>, |+>,
/// |+i>; for qutrits the three basis states and three superpositions.
std::vector<StateVector> probe_secrets(const CodeSpec& code);

/// Reduced state of the encoded secret on `subset`.
DensityMatrix reduced_share_state(const CodeSpec& code, const StateVector& secret, const QubitList& subset);

/// Largest trace distance between the reduced states of any probe secret
/// and the first probe.
double secret_dependence(const CodeSpec& code, const QubitList& subset);

/// Authorized iff the complement's erasure is correctable (qutrit: the
/// subset holds at least two whole shares); otherwise private iff the
/// probe secrets' reduced states agree within `tol`.
SubsetClass classify_subset(const CodeSpec& code, const QubitList& subset, double tol = 1e-9);

}  // namespace qss
