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

#include "qss/qcore/gate.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qss {
namespace {

struct GateInfo {
  GateKind kind;
  std::string_view name;
  int qubits;
  int params;
  bool clifford;
};

constexpr GateInfo kGates[] = {
    {GateKind::kH, "h", 1, 0, true},       {GateKind::kX, "x", 1, 0, true},
    {GateKind::kY, "y", 1, 0, true},       {GateKind::kZ, "z", 1, 0, true},
    {GateKind::kS, "s", 1, 0, true},       {GateKind::kSdg, "sdg", 1, 0, true},
    {GateKind::kSX, "sx", 1, 0, true},     {GateKind::kRX, "rx", 1, 1, false},
    {GateKind::kRY, "ry", 1, 1, false},    {GateKind::kRZ, "rz", 1, 1, false},
    {GateKind::kCNOT, "cx", 2, 0, true},   {GateKind::kCZ, "cz", 2, 0, true},
    {GateKind::kSWAP, "swap", 2, 0, true},
};

const GateInfo& info(GateKind kind) {
  for (const auto& g : kGates) {
    if (g.kind == kind) return g;
  }
  throw std::logic_error("unknown gate kind");
}

}  // namespace

GateSpec GateSpec::make(GateKind kind, QubitList targets, std::vector<double> params) {
  const auto& gi = info(kind);
  if (static_cast<int>(targets.size()) != gi.qubits) {
    throw std::invalid_argument("gate '" + std::string(gi.name) + "' expects " +
                                std::to_string(gi.qubits) + " target(s)");
  }
  if (static_cast<int>(params.size()) != gi.params) {
    throw std::invalid_argument("gate '" + std::string(gi.name) + "' expects " +
                                std::to_string(gi.params) + " parameter(s)");
  }
  for (int q : targets) {
    if (q < 1) throw std::invalid_argument("qubit indices are 1-based");
  }
  if (targets.size() == 2 && targets[0] == targets[1]) {
    throw std::invalid_argument("gate targets must be distinct");
  }
  return GateSpec{kind, std::move(params), std::move(targets)};
}

int gate_qubit_count(GateKind kind) { return info(kind).qubits; }
int gate_param_count(GateKind kind) { return info(kind).params; }
bool is_clifford(GateKind kind) { return info(kind).clifford; }
std::string_view gate_name(GateKind kind) { return info(kind).name; }

GateKind parse_gate_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "cnot") return GateKind::kCNOT;
  if (lower == "sdag" || lower == "s_dag") return GateKind::kSdg;
  if (lower == "sqrtx" || lower == "√x") return GateKind::kSX;
  for (const auto& g : kGates) {
    if (g.name == lower) return g.kind;
  }
  throw std::invalid_argument("unknown gate name '" + std::string(name) + "'");
}

Matrix gate_matrix(const GateSpec& gate) {
  const Complex i(0, 1);
  Matrix m;
  switch (gate.kind) {
    case GateKind::kH:
      m.resize(2, 2);
      m << 1, 1, 1, -1;
      return m / std::sqrt(2.0);
    case GateKind::kX:
      m.resize(2, 2);
      m << 0, 1, 1, 0;
      return m;
    case GateKind::kY:
      m.resize(2, 2);
      m << 0, -i, i, 0;
      return m;
    case GateKind::kZ:
      m.resize(2, 2);
      m << 1, 0, 0, -1;
      return m;
    case GateKind::kS:
      m.resize(2, 2);
      m << 1, 0, 0, i;
      return m;
    case GateKind::kSdg:
      m.resize(2, 2);
      m << 1, 0, 0, -i;
      return m;
    case GateKind::kSX:
      m.resize(2, 2);
      m << Complex(1, 1), Complex(1, -1), Complex(1, -1), Complex(1, 1);
      return m / 2.0;
    case GateKind::kRX: {
      const double c = std::cos(gate.params[0] / 2), s = std::sin(gate.params[0] / 2);
      m.resize(2, 2);
      m << c, -i * s, -i * s, c;
      return m;
    }
    case GateKind::kRY: {
      const double c = std::cos(gate.params[0] / 2), s = std::sin(gate.params[0] / 2);
      m.resize(2, 2);
      m << c, -s, s, c;
      return m;
    }
    case GateKind::kRZ: {
      const double h = gate.params[0] / 2;
      m = Matrix::Zero(2, 2);
      m(0, 0) = std::exp(-i * h);
      m(1, 1) = std::exp(i * h);
      return m;
    }
    case GateKind::kCNOT:
      m = Matrix::Zero(4, 4);
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
      return m;
    case GateKind::kCZ:
      m = Matrix::Identity(4, 4);
      m(3, 3) = -1;
      return m;
    case GateKind::kSWAP:
      m = Matrix::Zero(4, 4);
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
      return m;
  }
  throw std::logic_error("unhandled gate kind");
}

GateSpec inverse(const GateSpec& gate) {
  GateSpec inv = gate;
  switch (gate.kind) {
    case GateKind::kS:
      inv.kind = GateKind::kSdg;
      break;
    case GateKind::kSdg:
      inv.kind = GateKind::kS;
      break;
    case GateKind::kSX:
      // SX^-1 = SX^3 is not in the gate set; RX(-pi/2) is equal up to global phase.
      inv.kind = GateKind::kRX;
      inv.params = {-std::numbers::pi / 2};
      break;
    case GateKind::kRX:
    case GateKind::kRY:
    case GateKind::kRZ:
      inv.params[0] = -gate.params[0];
      break;
    default:
      break;
  }
  return inv;
}

std::string to_string(const GateSpec& gate) {
  std::ostringstream out;
  out << gate_name(gate.kind);
  if (!gate.params.empty()) {
    out << "(";
    for (size_t k = 0; k < gate.params.size(); ++k) out << (k ? "," : "") << gate.params[k];
    out << ")";
  }
  for (int q : gate.targets) out << " " << q;
  return out.str();
}

}  // namespace qss
