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

enum class RotationAxis { kX, kY };

/// One-qubit circuit over {RZ, SX} equal to RX(theta) or RY(theta) up to
/// global phase:
///   RX(theta) = RZ(pi/2) SX RZ(theta + pi) SX RZ(pi/2)
///   RY(theta) = RZ(pi)   SX RZ(theta + pi) SX
Circuit native_decomposition(RotationAxis axis, double theta);

}  // namespace qss
