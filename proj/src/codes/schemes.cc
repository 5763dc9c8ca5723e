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

#include "qss/codes/schemes.h"

#include <bit>
#include <functional>
#include <stdexcept>

#include "qss/codes/bundle.h"
#include "qss/codes/qutrit.h"
#include "qss/qcore/circuit_json.h"

namespace qss {
namespace {

void for_each_subset(int n, int max_size, const std::function<void(const QubitList&)>& fn) {
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (std::popcount(mask) > max_size) continue;
    QubitList s;
    for (int q = 1; q <= n; ++q) {
      if ((mask >> (q - 1)) & 1) s.push_back(q);
    }
    fn(s);
  }
}

}  // namespace

CodeSpec build_stabilizer_code(Scheme scheme, const nlohmann::json& entry) {
  CodeSpec code;
  code.scheme = scheme;
  code.name = entry.at("name").get<std::string>();
  code.n_physical = entry.at("n_physical").get<int>();
  code.distance = entry.at("distance").get<int>();
  code.threshold = entry.at("threshold").get<int>();
  code.encoding = circuit_from_json(entry.at("encoding"));
  if (code.encoding.n_qubits() != code.n_physical || !code.encoding.is_clifford()) {
    throw std::invalid_argument(code.name + ": encoder must be a Clifford circuit on every qubit");
  }
  const int secret = entry.at("secret_register").get<int>();
  code.secret_qubits = {secret};
  code.syndrome_registers = entry.at("syndrome_registers").get<QubitList>();
  code.generators = circuit_generators(code.encoding, secret, code.syndrome_registers);
  for (const auto& g : entry.at("reference_generators")) {
    code.reference_generators.push_back(PauliString::parse(g.get<std::string>()));
  }
  code.reference_logical_z = PauliString::parse(entry.at("reference_logical_z").get<std::string>());
  code.reference_logical_x = PauliString::parse(entry.at("reference_logical_x").get<std::string>());
  if (!same_stabilizer_group(code.generators.generators, code.reference_generators)) {
    throw std::logic_error(code.name + ": encoder does not realize the reference stabilizer group");
  }
  const int n = code.n_physical;
  for_each_subset(n, entry.at("max_erasure").get<int>(), [&](const QubitList& s) {
    Derivation d = derive_entries(code.encoding, code.generators, secret, s);
    if (!d.consistent()) return;
    CorrectionTable t{s, secret, {}};
    for (const auto& e : d.entries) t.rows.emplace(e.syndrome, e.correction);
    code.tables.emplace(s, std::move(t));
  });
  for (const auto& st : entry.at("stored_tables")) {
    CorrectionTable t = table_from_json(st);
    t.subset = normalize_subset(t.subset, n);
    code.stored_tables.push_back({st.at("name").get<std::string>(), std::move(t)});
  }
  return code;
}

CodeSpec build_qutrit_code() {
  CodeSpec code;
  code.scheme = Scheme::kQutrit;
  code.name = "qutrit";
  code.n_physical = 6;
  code.distance = 2;
  code.threshold = 2;
  code.encoding = qutrit_encoding_circuit();
  code.secret_qubits = {1, 2};
  return code;
}

const CodeSpec& get_code(Scheme scheme) {
  static const CodeSpec five = build_stabilizer_code(Scheme::kFiveQubit, codes_bundle().at("five_qubit"));
  static const CodeSpec steane = build_stabilizer_code(Scheme::kSteane, codes_bundle().at("steane"));
  static const CodeSpec qutrit = build_qutrit_code();
  switch (scheme) {
    case Scheme::kFiveQubit: return five;
    case Scheme::kSteane: return steane;
    case Scheme::kQutrit: return qutrit;
  }
  throw std::invalid_argument("unknown scheme");
}

QubitList canonical_decoder_subset(const CodeSpec& code, const QubitList& erased) {
  for (const auto& st : code.stored_tables) {
    if (st.table.subset.size() == erased.size()) return st.table.subset;
  }
  throw std::invalid_argument("no stored decoder for erasures of " + std::to_string(erased.size()) + " qubits");
}

}  // namespace qss
