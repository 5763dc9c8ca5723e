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

#include "qss/qcore/circuit.h"

#include <stdexcept>
#include <string>

namespace qss {

Circuit::Circuit(int n_qubits, int n_clbits)
    : n_qubits_(n_qubits), n_clbits_(n_clbits), written_(n_clbits, false) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw std::invalid_argument("circuit width must be in [1, " + std::to_string(kMaxQubits) +
                                "], got " + std::to_string(n_qubits));
  }
  if (n_clbits < 0) throw std::invalid_argument("negative clbit count");
}

void Circuit::check_qubit(int q) const {
  if (q < 1 || q > n_qubits_) {
    throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " +
                            std::to_string(n_qubits_) + "-qubit circuit");
  }
}

void Circuit::check_clbit(int c) const {
  if (c < 0 || c >= n_clbits_) {
    throw std::out_of_range("clbit " + std::to_string(c) + " out of range");
  }
}

Circuit& Circuit::add(GateSpec gate) {
  gate = GateSpec::make(gate.kind, gate.targets, gate.params);
  for (int q : gate.targets) check_qubit(q);
  ops_.emplace_back(std::move(gate));
  return *this;
}

Circuit& Circuit::add(GateKind kind, QubitList targets, std::vector<double> params) {
  return add(GateSpec::make(kind, std::move(targets), std::move(params)));
}

Circuit& Circuit::measure(int qubit, int clbit) {
  check_qubit(qubit);
  check_clbit(clbit);
  written_[clbit] = true;
  ops_.emplace_back(MeasureOp{qubit, clbit});
  return *this;
}

Circuit& Circuit::reset(int qubit) {
  check_qubit(qubit);
  ops_.emplace_back(ResetOp{qubit});
  return *this;
}

Circuit& Circuit::conditional(GateSpec gate, int clbit, int value) {
  return conditional(std::move(gate), std::vector<int>{clbit}, value);
}

Circuit& Circuit::conditional(GateSpec gate, std::vector<int> clbits, int value) {
  gate = GateSpec::make(gate.kind, gate.targets, gate.params);
  for (int q : gate.targets) check_qubit(q);
  if (clbits.empty()) throw std::invalid_argument("conditional needs at least one clbit");
  for (int c : clbits) {
    check_clbit(c);
    if (!written_[c]) {
      throw std::invalid_argument("conditional reads clbit " + std::to_string(c) +
                                  " before any measurement writes it");
    }
  }
  if (value < 0 || value >= (1 << clbits.size())) {
    throw std::invalid_argument("conditional value does not fit the clbit register");
  }
  ops_.emplace_back(ConditionalOp{std::move(gate), std::move(clbits), value});
  return *this;
}

Circuit& Circuit::add(const Operation& op) {
  std::visit(
      [this](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, GateSpec>) {
          add(o);
        } else if constexpr (std::is_same_v<T, MeasureOp>) {
          measure(o.qubit, o.clbit);
        } else if constexpr (std::is_same_v<T, ResetOp>) {
          reset(o.qubit);
        } else {
          conditional(o.gate, o.clbits, o.value);
        }
      },
      op);
  return *this;
}

Circuit& Circuit::append(const Circuit& other, const QubitList& qubit_map, int clbit_offset) {
  if (static_cast<int>(qubit_map.size()) != other.n_qubits()) {
    throw std::invalid_argument("qubit map size does not match appended circuit");
  }
  auto map_gate = [&](GateSpec g) {
    for (int& q : g.targets) q = qubit_map[q - 1];
    return g;
  };
  for (const auto& op : other.ops()) {
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, GateSpec>) {
            add(map_gate(o));
          } else if constexpr (std::is_same_v<T, MeasureOp>) {
            measure(qubit_map[o.qubit - 1], o.clbit + clbit_offset);
          } else if constexpr (std::is_same_v<T, ResetOp>) {
            reset(qubit_map[o.qubit - 1]);
          } else {
            std::vector<int> bits = o.clbits;
            for (int& c : bits) c += clbit_offset;
            conditional(map_gate(o.gate), std::move(bits), o.value);
          }
        },
        op);
  }
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits() != n_qubits_) {
    throw std::invalid_argument("appended circuit has a different width");
  }
  QubitList identity(n_qubits_);
  for (int q = 1; q <= n_qubits_; ++q) identity[q - 1] = q;
  return append(other, identity, 0);
}

bool Circuit::is_unitary() const {
  for (const auto& op : ops_) {
    if (!std::holds_alternative<GateSpec>(op)) return false;
  }
  return true;
}

bool Circuit::is_clifford() const {
  for (const auto& op : ops_) {
    const auto* g = std::get_if<GateSpec>(&op);
    if (g == nullptr || !qss::is_clifford(g->kind)) return false;
  }
  return true;
}

int Circuit::two_qubit_gate_count() const {
  int count = 0;
  for (const auto& op : ops_) {
    if (const auto* g = std::get_if<GateSpec>(&op)) {
      count += g->targets.size() == 2;
    } else if (const auto* c = std::get_if<ConditionalOp>(&op)) {
      count += c->gate.targets.size() == 2;
    }
  }
  return count;
}

Circuit Circuit::inverse() const {
  if (!is_unitary()) throw std::invalid_argument("only gate-only circuits can be inverted");
  Circuit inv(n_qubits_, n_clbits_);
  for (auto it = ops_.rbegin(); it != ops_.rend(); ++it) {
    inv.add(qss::inverse(std::get<GateSpec>(*it)));
  }
  return inv;
}

}  // namespace qss
