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
#include <vector>

#include "qss/codes/code_spec.h"
#include "qss/qcore/simulator.h"

namespace qss {

/// Places `secret` on the code's secret qubits, all other qubits |0>, and
/// runs the encoder. Qutrit secrets are two-qubit states with no |11>
/// component.
StateVector encode(const CodeSpec& code, const StateVector& secret);

/// Pre-encoding register state as an operator: `secret_op` (2x2, or 4x4 for
/// the qutrit scheme) on the secret qubits, |0><0| elsewhere.
Matrix embed_secret_operator(const CodeSpec& code, const Matrix& secret_op);

/// Replaces every qubit of `subset` by a fresh |0>, keeping positions.
DensityMatrix erase_to_fresh(const DensityMatrix& state, const QubitList& subset);
DensityMatrix erase_to_fresh(const StateVector& state, const QubitList& subset);

/// Qubits holding the recovered secret after decoding with the decoder for
/// `decoder_subset`.
QubitList decoder_output(const CodeSpec& code, const QubitList& decoder_subset);

/// U^dagger followed by syndrome processing for the table of
/// `decoder_subset`. MCM measures the syndrome registers into clbits
/// 0..m-1 and applies R_k by classical conditioning; DCM applies a
/// CNOT/CZ network keyed on the syndrome registers and measures them last.
/// For the qutrit scheme this is the recovery circuit and `mode` is ignored.
Circuit decode_circuit(const CodeSpec& code, const QubitList& decoder_subset, DecodeMode mode);

struct PipelineSpec {
  QubitList erased;
  DecodeMode mode = DecodeMode::kMCM;
  /// Table used for decoding; defaults to the erased subset's own table.
  std::optional<QubitList> decoder_subset;
};

/// Resolves and validates the decoder subset. Throws std::invalid_argument
/// if the erasure is not correctable and no decoder subset was given.
QubitList resolve_decoder(const CodeSpec& code, const PipelineSpec& spec);

/// encoder, reset of every erased qubit, decoder.
Circuit pipeline_circuit(const CodeSpec& code, const PipelineSpec& spec);

/// Non-selective pipeline applied to a secret-space operator; returns the
/// operator on the decoder output qubits. Linear in `secret_op`.
Matrix run_pipeline(const CodeSpec& code, const Matrix& secret_op, const PipelineSpec& spec,
                    const GateHook& hook = {});

struct DecodeResult {
  DensityMatrix secret;
  /// Observed syndrome bits (MCM) or end-of-circuit readout (DCM); empty
  /// for the qutrit scheme.
  std::vector<int> syndrome;
};

/// Decodes a state whose erased qubits were already refreshed to |0>.
DecodeResult decode(const CodeSpec& code, const DensityMatrix& state, const QubitList& erased, DecodeMode mode,
                    Rng& rng, const GateHook& hook = {});

}  // namespace qss
