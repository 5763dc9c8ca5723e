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
#include "qss/qcore/state.h"

namespace qss {

enum class SecretKind { kQubit, kQutrit };

/// Angles of a secret. Qubit: theta in [0, pi], phi in [0, 2 pi].
/// Qutrit: theta1 in [0, 2 pi], theta2 in [0, pi].
struct SecretSpec {
  SecretKind kind = SecretKind::kQubit;
  double theta = 0.0;
  double phi = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;

  static SecretSpec qubit(double theta, double phi);
  static SecretSpec qutrit(double theta1, double theta2);
};

/// Qubit: cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
/// Qutrit (two qubits): a|00> + b|01> + c|10> with a = cos(theta2/2),
/// b = sin(theta2/2) cos(theta1), c = sin(theta2/2) sin(theta1).
StateVector prepare_secret(const SecretSpec& spec);

/// One-qubit gate sequence RX(theta), RZ(phi + pi/2) that prepares the qubit
/// secret from |0> up to global phase.
Circuit secret_preparation_circuit(const SecretSpec& spec);

/// Qutrit amplitudes (a, b, c) as a two-qubit state.
StateVector qutrit_state(Complex a, Complex b, Complex c);

}  // namespace qss
