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

#include "qss/codes/qutrit.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qss/qcore/composite.h"
#include "qss/qcore/simulator.h"

namespace qss {
namespace {

int high(int qutrit) { return 2 * qutrit - 1; }
int low(int qutrit) { return 2 * qutrit; }

// Exchanges |00> and |01> of the target qutrit when `control` is 1.
void controlled_swap_01(Circuit& c, int control, int qutrit) {
  c.x(high(qutrit));
  append_toffoli(c, control, high(qutrit), low(qutrit));
  c.x(high(qutrit));
}

// Exchanges |01> and |10> of the target qutrit when `control` is 1.
void controlled_swap_12(Circuit& c, int control, int qutrit) { append_fredkin(c, control, high(qutrit), low(qutrit)); }

}  // namespace

std::string_view qutrit_pair_name(QutritPair p) {
  switch (p) {
    case QutritPair::k12: return "12";
    case QutritPair::k23: return "23";
    case QutritPair::k31: return "31";
  }
  return "?";
}

QutritPair parse_qutrit_pair(std::string_view label) {
  if (label == "12") return QutritPair::k12;
  if (label == "23") return QutritPair::k23;
  if (label == "31") return QutritPair::k31;
  throw std::invalid_argument("invalid share pair '" + std::string(label) + "'");
}

QubitList qutrit_pair_erased(QutritPair p) {
  switch (p) {
    case QutritPair::k12: return {5, 6};
    case QutritPair::k23: return {1, 2};
    case QutritPair::k31: return {3, 4};
  }
  return {};
}

QubitList qutrit_pair_output(QutritPair p) {
  switch (p) {
    case QutritPair::k12: return {1, 2};
    case QutritPair::k23: return {3, 4};
    case QutritPair::k31: return {5, 6};
  }
  return {};
}

QutritPair qutrit_pair_for_erasure(const QubitList& erased) {
  for (QutritPair p : {QutritPair::k12, QutritPair::k23, QutritPair::k31}) {
    if (qutrit_pair_erased(p) == erased) return p;
  }
  throw std::invalid_argument("qutrit erasures must cover exactly one share: {1,2}, {3,4} or {5,6}");
}

void append_qutrit_add(Circuit& c, int source, int target) {
  // +1 when the source reads 1: swap(01,10) then swap(00,01).
  controlled_swap_12(c, low(source), target);
  controlled_swap_01(c, low(source), target);
  // +2 when the source reads 2: swap(00,01) then swap(01,10).
  controlled_swap_01(c, high(source), target);
  controlled_swap_12(c, high(source), target);
}

Circuit qutrit_encoding_circuit() {
  Circuit c(6);
  // Uniform superposition of |0>, |1>, |2> on qutrit 2.
  c.ry(high(2), 2 * std::acos(std::sqrt(2.0 / 3.0)));
  c.x(high(2));
  append_controlled_ry(c, high(2), low(2), std::numbers::pi / 2);
  c.x(high(2));
  append_qutrit_add(c, 2, 3);
  append_qutrit_add(c, 1, 3);
  append_qutrit_add(c, 1, 3);
  append_qutrit_add(c, 1, 2);
  c.swap(high(1), low(1));
  append_qutrit_add(c, 2, 1);
  return c;
}

Circuit qutrit_recovery_circuit(QutritPair p) {
  static constexpr int kPairs[3][2] = {{1, 2}, {2, 3}, {3, 1}};
  const auto& ij = kPairs[static_cast<int>(p)];
  Circuit c(6);
  append_qutrit_add(c, ij[0], ij[1]);
  append_qutrit_add(c, ij[1], ij[0]);
  return c;
}

StateVector qutrit_recover(const StateVector& state, QutritPair p) {
  if (state.n_qubits() != 6) throw std::invalid_argument("qutrit recovery needs a six-qubit state");
  Rng rng(0);
  return apply_circuit(state, qutrit_recovery_circuit(p), rng).state;
}

DensityMatrix qutrit_recover(const DensityMatrix& state, QutritPair p) {
  if (state.n_qubits() != 6) throw std::invalid_argument("qutrit recovery needs a six-qubit state");
  Rng rng(0);
  return apply_circuit(state, qutrit_recovery_circuit(p), rng).state;
}

}  // namespace qss
