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

#include <variant>
#include <vector>

#include "qss/qcore/gate.h"

namespace qss {

struct MeasureOp {
  int qubit;
  int clbit;
  bool operator==(const MeasureOp&) const = default;
};

struct ResetOp {
  int qubit;
  bool operator==(const ResetOp&) const = default;
};

/// Applies `gate` iff the classical register formed by `clbits` reads
/// `value`, with clbits[0] as the most significant bit. A single-element
/// register is the usual one-bit feed-forward.
struct ConditionalOp {
  GateSpec gate;
  std::vector<int> clbits;
  int value;
  bool operator==(const ConditionalOp&) const = default;
};

using Operation = std::variant<GateSpec, MeasureOp, ResetOp, ConditionalOp>;

/// Ordered list of operations on `n_qubits` qubits (1-based) and `n_clbits`
/// classical bits (0-based). Every mutation is validated: indices must be in
/// range and a conditional may only read clbits written by an earlier Measure.
class Circuit {
 public:
  explicit Circuit(int n_qubits, int n_clbits = 0);

  int n_qubits() const { return n_qubits_; }
  int n_clbits() const { return n_clbits_; }
  const std::vector<Operation>& ops() const { return ops_; }
  bool empty() const { return ops_.empty(); }
  size_t size() const { return ops_.size(); }

  Circuit& add(GateSpec gate);
  Circuit& add(GateKind kind, QubitList targets, std::vector<double> params = {});
  Circuit& measure(int qubit, int clbit);
  Circuit& reset(int qubit);
  Circuit& conditional(GateSpec gate, int clbit, int value);
  Circuit& conditional(GateSpec gate, std::vector<int> clbits, int value);
  Circuit& add(const Operation& op);

  Circuit& h(int q) { return add(GateKind::kH, {q}); }
  Circuit& x(int q) { return add(GateKind::kX, {q}); }
  Circuit& y(int q) { return add(GateKind::kY, {q}); }
  Circuit& z(int q) { return add(GateKind::kZ, {q}); }
  Circuit& s(int q) { return add(GateKind::kS, {q}); }
  Circuit& sdg(int q) { return add(GateKind::kSdg, {q}); }
  Circuit& sx(int q) { return add(GateKind::kSX, {q}); }
  Circuit& rx(int q, double theta) { return add(GateKind::kRX, {q}, {theta}); }
  Circuit& ry(int q, double theta) { return add(GateKind::kRY, {q}, {theta}); }
  Circuit& rz(int q, double phi) { return add(GateKind::kRZ, {q}, {phi}); }
  Circuit& cx(int control, int target) { return add(GateKind::kCNOT, {control, target}); }
  Circuit& cz(int a, int b) { return add(GateKind::kCZ, {a, b}); }
  Circuit& swap(int a, int b) { return add(GateKind::kSWAP, {a, b}); }

  /// Appends `other`, whose qubit k is placed on qubit_map[k-1] of this
  /// circuit and whose clbit c is placed on clbit c + clbit_offset.
  Circuit& append(const Circuit& other, const QubitList& qubit_map, int clbit_offset = 0);
  /// Appends a circuit of the same width, clbits unshifted.
  Circuit& append(const Circuit& other);

  bool is_unitary() const;
  bool is_clifford() const;
  int two_qubit_gate_count() const;

  /// Reverse-order adjoint of a gate-only circuit.
  Circuit inverse() const;

  bool operator==(const Circuit&) const = default;

 private:
  void check_qubit(int q) const;
  void check_clbit(int c) const;

  int n_qubits_;
  int n_clbits_;
  std::vector<Operation> ops_;
  std::vector<bool> written_;
};

}  // namespace qss
