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

#include "qss/stabilizer/generators.h"

#include <set>
#include <stdexcept>

#include "qss/stabilizer/clifford.h"

namespace qss {

GeneratorSet GeneratorSet::make(std::vector<PauliString> generators, PauliString logical_z, PauliString logical_x) {
  const int n = logical_z.n_qubits();
  if (logical_x.n_qubits() != n) throw std::invalid_argument("logical operators differ in length");
  for (const auto& g : generators) {
    if (g.n_qubits() != n) throw std::invalid_argument("generator " + g.str() + " has the wrong length");
  }
  for (size_t i = 0; i < generators.size(); ++i) {
    for (size_t j = i + 1; j < generators.size(); ++j) {
      if (!generators[i].commutes_with(generators[j])) {
        throw std::invalid_argument("generators " + generators[i].str() + " and " + generators[j].str() +
                                    " anticommute");
      }
    }
    if (!generators[i].commutes_with(logical_z) || !generators[i].commutes_with(logical_x)) {
      throw std::invalid_argument("logical operator anticommutes with generator " + generators[i].str());
    }
  }
  if (logical_x.commutes_with(logical_z)) throw std::invalid_argument("logical X must anticommute with logical Z");
  return GeneratorSet{std::move(generators), std::move(logical_z), std::move(logical_x)};
}

GeneratorSet circuit_generators(const Circuit& encoding, int secret_register, const QubitList& syndrome_registers) {
  const int n = encoding.n_qubits();
  std::vector<PauliString> gens;
  for (int r : syndrome_registers) gens.push_back(conjugate_pauli(encoding, PauliString::single(n, r, 'Z')));
  return GeneratorSet::make(std::move(gens), conjugate_pauli(encoding, PauliString::single(n, secret_register, 'Z')),
                            conjugate_pauli(encoding, PauliString::single(n, secret_register, 'X')));
}

std::vector<int> syndrome_of(const PauliString& error, const GeneratorSet& gens) {
  if (error.n_qubits() != gens.n_qubits()) {
    throw std::invalid_argument("error length " + std::to_string(error.n_qubits()) + " differs from code length " +
                                std::to_string(gens.n_qubits()));
  }
  std::vector<int> bits;
  for (const auto& g : gens.generators) bits.push_back(error.commutes_with(g) ? 0 : 1);
  return bits;
}

std::string syndrome_string(const std::vector<int>& bits) {
  std::string s;
  for (int b : bits) s += b ? '1' : '0';
  return s;
}

EncodingReport verify_encoding(const Circuit& encoding, const GeneratorSet& gens) {
  QubitList regs;
  for (int i = 1; i <= static_cast<int>(gens.generators.size()); ++i) regs.push_back(i);
  return verify_encoding(encoding, gens, encoding.n_qubits(), regs);
}

EncodingReport verify_encoding(const Circuit& encoding, const GeneratorSet& gens, int secret_register,
                               const QubitList& syndrome_registers) {
  if (syndrome_registers.size() != gens.generators.size()) {
    throw std::invalid_argument("one syndrome register per generator is required");
  }
  const int n = encoding.n_qubits();
  EncodingReport report;
  for (size_t i = 0; i < syndrome_registers.size(); ++i) {
    const int r = syndrome_registers[i];
    PauliString actual = conjugate_pauli(encoding, PauliString::single(n, r, 'Z'));
    const bool ok = actual == gens.generators[i];
    if (!ok) ++report.generator_mismatches;
    report.checks.push_back({"Z" + std::to_string(r) + " -> g" + std::to_string(i + 1), gens.generators[i],
                             std::move(actual), ok});
  }
  PauliString actual = conjugate_pauli(encoding, PauliString::single(n, secret_register, 'Z'));
  report.logical_ok = actual == gens.logical_z;
  report.checks.push_back({"Z" + std::to_string(secret_register) + " -> logical Z", gens.logical_z,
                           std::move(actual), report.logical_ok});
  return report;
}

bool same_stabilizer_group(const std::vector<PauliString>& a, const std::vector<PauliString>& b) {
  auto closure = [](const std::vector<PauliString>& gens) {
    std::set<std::pair<std::string, int>> group;
    const size_t k = gens.size();
    for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
      PauliString p(gens.empty() ? 0 : gens[0].n_qubits());
      for (size_t i = 0; i < k; ++i) {
        if ((mask >> i) & 1) p = p * gens[i];
      }
      group.insert({p.letters(), p.phase()});
    }
    return group;
  };
  return closure(a) == closure(b);
}

}  // namespace qss
