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

#include "qss/stabilizer/clifford.h"

#include <stdexcept>

namespace qss {
namespace {

struct Images {
  PauliString x;
  PauliString z;
};

// Images of X_q and Z_q under the gate, for each target q.
std::vector<Images> gate_images(const GateSpec& g, int n) {
  auto P = [n](std::initializer_list<std::pair<int, char>> letters, int phase = 0) {
    PauliString p(n);
    for (auto [q, c] : letters) p.set_letter(q, c);
    p.set_phase(phase);
    return p;
  };
  const int a = g.targets[0];
  switch (g.kind) {
    case GateKind::kH: return {{P({{a, 'Z'}}), P({{a, 'X'}})}};
    case GateKind::kX: return {{P({{a, 'X'}}), P({{a, 'Z'}}, 2)}};
    case GateKind::kY: return {{P({{a, 'X'}}, 2), P({{a, 'Z'}}, 2)}};
    case GateKind::kZ: return {{P({{a, 'X'}}, 2), P({{a, 'Z'}})}};
    case GateKind::kS: return {{P({{a, 'Y'}}), P({{a, 'Z'}})}};
    case GateKind::kSdg: return {{P({{a, 'Y'}}, 2), P({{a, 'Z'}})}};
    case GateKind::kSX: return {{P({{a, 'X'}}), P({{a, 'Y'}}, 2)}};
    default: break;
  }
  const int b = g.targets[1];
  switch (g.kind) {
    case GateKind::kCNOT:
      return {{P({{a, 'X'}, {b, 'X'}}), P({{a, 'Z'}})}, {P({{b, 'X'}}), P({{a, 'Z'}, {b, 'Z'}})}};
    case GateKind::kCZ:
      return {{P({{a, 'X'}, {b, 'Z'}}), P({{a, 'Z'}})}, {P({{a, 'Z'}, {b, 'X'}}), P({{b, 'Z'}})}};
    case GateKind::kSWAP:
      return {{P({{b, 'X'}}), P({{b, 'Z'}})}, {P({{a, 'X'}}), P({{a, 'Z'}})}};
    default:
      throw std::invalid_argument("gate '" + to_string(g) + "' is not Clifford");
  }
}

}  // namespace

PauliString conjugate_gate(const GateSpec& gate, const PauliString& p) {
  if (!is_clifford(gate.kind)) throw std::invalid_argument("gate '" + to_string(gate) + "' is not Clifford");
  const int n = p.n_qubits();
  for (int q : gate.targets) {
    if (q < 1 || q > n) throw std::out_of_range("gate target outside Pauli string");
  }
  const auto images = gate_images(gate, n);
  PauliString rest = p;
  PauliString acc(n);
  int extra_phase = 0;
  for (size_t j = 0; j < gate.targets.size(); ++j) {
    const int q = gate.targets[j];
    const char c = p.letter(q);
    rest.set_letter(q, 'I');
    // Y = i X Z, so its image is i * img(X) * img(Z).
    if (c == 'X' || c == 'Y') acc = acc * images[j].x;
    if (c == 'Z' || c == 'Y') acc = acc * images[j].z;
    if (c == 'Y') extra_phase += 1;
  }
  PauliString out = rest * acc;
  out.set_phase(out.phase() + extra_phase);
  return out;
}

PauliString conjugate_pauli(const Circuit& clifford, const PauliString& p) {
  if (clifford.n_qubits() != p.n_qubits()) {
    throw std::invalid_argument("Pauli length " + std::to_string(p.n_qubits()) + " differs from circuit width " +
                                std::to_string(clifford.n_qubits()));
  }
  PauliString out = p;
  for (const Operation& op : clifford.ops()) {
    const auto* g = std::get_if<GateSpec>(&op);
    if (!g) throw std::invalid_argument("conjugate_pauli needs a gate-only circuit");
    out = conjugate_gate(*g, out);
  }
  return out;
}

}  // namespace qss
