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

#include "qss/qcore/circuit.h"
#include "qss/stabilizer/pauli.h"

namespace qss {

/// G p G^dagger for one Clifford gate. Throws std::invalid_argument for
/// non-Clifford gates.
PauliString conjugate_gate(const GateSpec& gate, const PauliString& p);

/// U p U^dagger where U is the unitary of `clifford` (first op applied
/// first). The circuit must contain only Clifford gates.
PauliString conjugate_pauli(const Circuit& clifford, const PauliString& p);

}  // namespace qss
