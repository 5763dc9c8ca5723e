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

namespace qss {

/// Toffoli via the standard six-CNOT network, with T realized as RZ(pi/4);
/// equal to CCX up to a global phase.
void append_toffoli(Circuit& c, int control_a, int control_b, int target);

/// Controlled-SWAP as CNOT(b,a) CCX(control,a,b) CNOT(b,a).
void append_fredkin(Circuit& c, int control, int a, int b);

/// Controlled-RY(theta) as RY(theta/2) CX RY(-theta/2) CX on the target.
void append_controlled_ry(Circuit& c, int control, int target, double theta);

}  // namespace qss
