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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qss/qcore/circuit.h"
#include "qss/qcore/rng.h"
#include "qss/qcore/state.h"

namespace qss {

/// Bitstring (qubit 1 first) to number of occurrences.
using Counts = std::map<std::string, int>;

/// Called after every applied gate on a density-matrix (or operator)
/// simulation; used to inject noise.
using GateHook = std::function<void(Matrix& op, int n_qubits, const GateSpec& gate)>;

StateVector apply_gate(const StateVector& state, const GateSpec& gate);
DensityMatrix apply_gate(const DensityMatrix& state, const GateSpec& gate);

/// In-place variants. The operator form computes U op U^dagger.
void apply_gate_inplace(Vector& amps, int n_qubits, const GateSpec& gate);
void apply_gate_inplace(Matrix& op, int n_qubits, const GateSpec& gate);

template <typename State>
struct CircuitRun {
  State state;
  std::vector<int> clbits;
};

/// Runs the circuit, sampling measurement outcomes from `rng`. Reset on a
/// state vector measures and flips; on a density matrix it is the exact
/// reset channel.
CircuitRun<StateVector> apply_circuit(const StateVector& state, const Circuit& circuit, Rng& rng);
CircuitRun<DensityMatrix> apply_circuit(const DensityMatrix& state, const Circuit& circuit, Rng& rng,
                                        const GateHook& hook = {});

/// Non-selective evolution: every measurement branch is followed and the
/// branches are summed. Linear in `op`, so it also propagates operators such
/// as |i><j| that are not states.
Matrix average_circuit(const Matrix& op, int n_qubits, const Circuit& circuit, const GateHook& hook = {});

std::vector<double> probabilities(const StateVector& state);
std::vector<double> probabilities(const DensityMatrix& state);

Counts sample_counts(const std::vector<double>& probs, int n_qubits, int shots, Rng& rng);
Counts measure_all(const StateVector& state, int shots, Rng& rng);
Counts measure_all(const DensityMatrix& state, int shots, Rng& rng);

/// Reduced operator on `keep`; output qubit j is keep[j-1].
Matrix partial_trace(const Matrix& op, int n_qubits, const QubitList& keep);
DensityMatrix partial_trace(const DensityMatrix& state, const QubitList& keep);

double fidelity(const StateVector& a, const StateVector& b);
/// Uhlmann fidelity (tr sqrt(sqrt(a) b sqrt(a)))^2.
double fidelity(const DensityMatrix& a, const DensityMatrix& b);
/// <psi|rho|psi>.
double fidelity(const DensityMatrix& rho, const StateVector& psi);

/// Unitary of a gate-only circuit.
Matrix circuit_unitary(const Circuit& circuit);

/// True if a = e^{i delta} b for some delta, within `tol` entrywise.
bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol);

}  // namespace qss
