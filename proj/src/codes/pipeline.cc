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

#include "qss/codes/pipeline.h"

#include <stdexcept>

#include "qss/codes/qutrit.h"
#include "qss/codes/schemes.h"
#include "qss/qcore/kernels.h"

namespace qss {
namespace {

GateKind letter_gate(char c) {
  switch (c) {
    case 'X': return GateKind::kX;
    case 'Y': return GateKind::kY;
    default: return GateKind::kZ;
  }
}

int syndrome_value(const std::string& s) {
  int v = 0;
  for (char c : s) v = (v << 1) | (c == '1');
  return v;
}

}  // namespace

StateVector encode(const CodeSpec& code, const StateVector& secret) {
  const int ns = static_cast<int>(code.secret_qubits.size());
  if (secret.n_qubits() != ns) {
    throw std::invalid_argument("secret has " + std::to_string(secret.n_qubits()) + " qubit(s); scheme " + code.name +
                                " expects " + std::to_string(ns));
  }
  if (!code.is_stabilizer() && std::abs(secret[3]) > 1e-12) {
    throw std::invalid_argument("qutrit secret has a nonzero |11> amplitude");
  }
  const int n = code.n_physical;
  Vector amps = Vector::Zero(Eigen::Index{1} << n);
  for (uint64_t i = 0; i < secret.dim(); ++i) {
    uint64_t idx = 0;
    for (int j = 0; j < ns; ++j) {
      if ((i >> (ns - 1 - j)) & 1) idx |= uint64_t{1} << bit_position(n, code.secret_qubits[j]);
    }
    amps(static_cast<Eigen::Index>(idx)) = secret[i];
  }
  Rng rng(0);
  return apply_circuit(StateVector::from_raw(n, std::move(amps)), code.encoding, rng).state;
}

Matrix embed_secret_operator(const CodeSpec& code, const Matrix& secret_op) {
  const int ns = static_cast<int>(code.secret_qubits.size());
  const Eigen::Index ds = Eigen::Index{1} << ns;
  if (secret_op.rows() != ds || secret_op.cols() != ds) {
    throw std::invalid_argument("secret operator dimension does not match scheme " + code.name);
  }
  const int n = code.n_physical;
  auto spread = [&](Eigen::Index i) {
    Eigen::Index idx = 0;
    for (int j = 0; j < ns; ++j) {
      if ((i >> (ns - 1 - j)) & 1) idx |= Eigen::Index{1} << bit_position(n, code.secret_qubits[j]);
    }
    return idx;
  };
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix op = Matrix::Zero(dim, dim);
  for (Eigen::Index r = 0; r < ds; ++r) {
    for (Eigen::Index c = 0; c < ds; ++c) op(spread(r), spread(c)) = secret_op(r, c);
  }
  return op;
}

DensityMatrix erase_to_fresh(const DensityMatrix& state, const QubitList& subset) {
  const int n = state.n_qubits();
  const QubitList s = normalize_subset(subset, n);
  Matrix rho = state.matrix();
  for (int q : s) kernels::reset(rho, n, q);
  return DensityMatrix::from_raw(n, std::move(rho));
}

DensityMatrix erase_to_fresh(const StateVector& state, const QubitList& subset) {
  return erase_to_fresh(DensityMatrix::from_pure(state), subset);
}

QubitList decoder_output(const CodeSpec& code, const QubitList& decoder_subset) {
  if (code.is_stabilizer()) return code.secret_qubits;
  return qutrit_pair_output(qutrit_pair_for_erasure(decoder_subset));
}

Circuit decode_circuit(const CodeSpec& code, const QubitList& decoder_subset, DecodeMode mode) {
  if (!code.is_stabilizer()) return qutrit_recovery_circuit(qutrit_pair_for_erasure(decoder_subset));
  const CorrectionTable& table = code.table(decoder_subset);
  const int m = static_cast<int>(code.syndrome_registers.size());
  const int s = code.secret_qubits[0];
  Circuit c(code.n_physical, m);
  c.append(code.encoding.inverse());
  if (mode == DecodeMode::kMCM) {
    std::vector<int> clbits;
    for (int i = 0; i < m; ++i) {
      c.measure(code.syndrome_registers[i], i);
      clbits.push_back(i);
    }
    for (const auto& [syndrome, letter] : table.rows) {
      if (letter == 'I') continue;
      c.conditional(GateSpec::make(letter_gate(letter), {s}), clbits, syndrome_value(syndrome));
    }
  } else {
    auto fit = fit_linear_correction(table);
    if (!fit) throw std::logic_error("correction table has no linear coherent decoder");
    for (int i = 0; i < m; ++i) {
      if (fit->x[i]) c.cx(code.syndrome_registers[i], s);
    }
    for (int i = 0; i < m; ++i) {
      if (fit->z[i]) c.cz(code.syndrome_registers[i], s);
    }
    for (int i = 0; i < m; ++i) c.measure(code.syndrome_registers[i], i);
  }
  return c;
}

QubitList resolve_decoder(const CodeSpec& code, const PipelineSpec& spec) {
  const QubitList erased = normalize_subset(spec.erased, code.n_physical);
  if (spec.decoder_subset) {
    const QubitList d = normalize_subset(*spec.decoder_subset, code.n_physical);
    if (code.is_stabilizer()) {
      code.table(d);
    } else {
      qutrit_pair_for_erasure(d);
    }
    return d;
  }
  if (code.is_stabilizer()) {
    if (!code.has_table(erased)) throw std::invalid_argument("erasure is not correctable for scheme " + code.name);
    return erased;
  }
  qutrit_pair_for_erasure(erased);
  return erased;
}

Circuit pipeline_circuit(const CodeSpec& code, const PipelineSpec& spec) {
  const QubitList decoder = resolve_decoder(code, spec);
  const QubitList erased = normalize_subset(spec.erased, code.n_physical);
  const Circuit dec = decode_circuit(code, decoder, spec.mode);
  Circuit c(code.n_physical, dec.n_clbits());
  c.append(code.encoding);
  for (int q : erased) c.reset(q);
  c.append(dec);
  return c;
}

Matrix run_pipeline(const CodeSpec& code, const Matrix& secret_op, const PipelineSpec& spec, const GateHook& hook) {
  const QubitList decoder = resolve_decoder(code, spec);
  const Matrix out = average_circuit(embed_secret_operator(code, secret_op), code.n_physical,
                                     pipeline_circuit(code, spec), hook);
  return partial_trace(out, code.n_physical, decoder_output(code, decoder));
}

DecodeResult decode(const CodeSpec& code, const DensityMatrix& state, const QubitList& erased, DecodeMode mode,
                    Rng& rng, const GateHook& hook) {
  if (state.n_qubits() != code.n_physical) throw std::invalid_argument("state width does not match the scheme");
  const QubitList decoder = resolve_decoder(code, PipelineSpec{erased, mode, std::nullopt});
  auto run = apply_circuit(state, decode_circuit(code, decoder, mode), rng, hook);
  return {partial_trace(run.state, decoder_output(code, decoder)), std::move(run.clbits)};
}

}  // namespace qss
