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

#include <optional>

#include "qss/qcore/circuit.h"
#include "qss/qcore/rng.h"
#include "qss/qcore/state.h"

namespace qss {

struct SwapTestResult {
  /// Probability of reading 0 on the ancilla, (1 + <phi|rho|phi>) / 2.
  double exact_p0 = 0.0;
  /// Fraction of sampled shots reading 0.
  std::optional<double> sampled_rate;
  int shots = 0;
};

/// Ancilla (qubit 1), register A (qubits 2..k+1) and register B
/// (qubits k+2..2k+1): H, controlled-SWAP of A and B qubit by qubit, H,
/// measure the ancilla into clbit 0.
Circuit swap_test_circuit(int register_qubits);

/// Runs the SWAP-test circuit on rho (x) |phi><phi| and, if `shots` is
/// given, draws that many ancilla readings.
SwapTestResult swap_test(const DensityMatrix& rho, const StateVector& phi, std::optional<int> shots, Rng& rng);
SwapTestResult swap_test(const StateVector& psi, const StateVector& phi, std::optional<int> shots, Rng& rng);

/// Number of zeros in `shots` Bernoulli(p0) draws.
int sample_zero_count(double p0, int shots, Rng& rng);

}  // namespace qss
