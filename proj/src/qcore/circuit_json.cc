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

#include "qss/qcore/circuit_json.h"

#include <stdexcept>

namespace qss {
namespace {

nlohmann::json gate_fields(const GateSpec& g) {
  nlohmann::json j;
  j["name"] = std::string(gate_name(g.kind));
  j["targets"] = g.targets;
  j["params"] = g.params;
  return j;
}

GateSpec parse_gate(const nlohmann::json& j) {
  const auto kind = parse_gate_name(j.at("name").get<std::string>());
  auto targets = j.at("targets").get<QubitList>();
  std::vector<double> params;
  if (j.contains("params")) params = j.at("params").get<std::vector<double>>();
  return GateSpec::make(kind, std::move(targets), std::move(params));
}

}  // namespace

nlohmann::json circuit_to_json(const Circuit& circuit) {
  nlohmann::json ops = nlohmann::json::array();
  for (const auto& op : circuit.ops()) {
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          nlohmann::json j;
          if constexpr (std::is_same_v<T, GateSpec>) {
            j = gate_fields(o);
            j["kind"] = "gate";
          } else if constexpr (std::is_same_v<T, MeasureOp>) {
            j["kind"] = "measure";
            j["qubit"] = o.qubit;
            j["clbit"] = o.clbit;
          } else if constexpr (std::is_same_v<T, ResetOp>) {
            j["kind"] = "reset";
            j["qubit"] = o.qubit;
          } else {
            j = gate_fields(o.gate);
            j["kind"] = "cond_gate";
            if (o.clbits.size() == 1) {
              j["clbit"] = o.clbits[0];
            } else {
              j["clbits"] = o.clbits;
            }
            j["value"] = o.value;
          }
          ops.push_back(std::move(j));
        },
        op);
  }
  return {{"n_qubits", circuit.n_qubits()}, {"n_clbits", circuit.n_clbits()}, {"ops", ops}};
}

Circuit circuit_from_json(const nlohmann::json& j) {
  Circuit circuit(j.at("n_qubits").get<int>(), j.value("n_clbits", 0));
  for (const auto& op : j.at("ops")) {
    const auto kind = op.at("kind").get<std::string>();
    if (kind == "gate") {
      circuit.add(parse_gate(op));
    } else if (kind == "measure") {
      circuit.measure(op.at("qubit").get<int>(), op.at("clbit").get<int>());
    } else if (kind == "reset") {
      circuit.reset(op.at("qubit").get<int>());
    } else if (kind == "cond_gate") {
      std::vector<int> clbits;
      if (op.contains("clbits")) {
        clbits = op.at("clbits").get<std::vector<int>>();
      } else {
        clbits = {op.at("clbit").get<int>()};
      }
      circuit.conditional(parse_gate(op), std::move(clbits), op.at("value").get<int>());
    } else {
      throw std::invalid_argument("unknown op kind '" + kind + "'");
    }
  }
  return circuit;
}

std::string circuit_to_json_string(const Circuit& circuit, int indent) {
  return circuit_to_json(circuit).dump(indent);
}

Circuit circuit_from_json_string(const std::string& text) {
  return circuit_from_json(nlohmann::json::parse(text));
}

}  // namespace qss
