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

#include "qss/stabilizer/correction_table.h"

#include "qss/stabilizer/clifford.h"

namespace qss {
namespace {

constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};

bool valid_letter(char c) { return c == 'I' || c == 'X' || c == 'Y' || c == 'Z'; }

// Solves sum_j c[j] b[j] = target over all rows; nullopt if inconsistent.
std::optional<std::vector<int>> solve_gf2(const std::vector<std::vector<int>>& rows, const std::vector<int>& target,
                                          int m) {
  std::vector<std::vector<int>> a;
  for (size_t i = 0; i < rows.size(); ++i) {
    std::vector<int> r = rows[i];
    r.push_back(target[i]);
    a.push_back(std::move(r));
  }
  std::vector<int> pivot_col;
  size_t rank = 0;
  for (int col = 0; col < m && rank < a.size(); ++col) {
    size_t piv = rank;
    while (piv < a.size() && a[piv][col] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    for (size_t i = 0; i < a.size(); ++i) {
      if (i != rank && a[i][col]) {
        for (int k = 0; k <= m; ++k) a[i][k] ^= a[rank][k];
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (size_t i = rank; i < a.size(); ++i) {
    if (a[i][m]) return std::nullopt;
  }
  std::vector<int> c(m, 0);
  for (size_t i = 0; i < rank; ++i) c[pivot_col[i]] = a[i][m];
  return c;
}

}  // namespace

char CorrectionTable::correction(const std::string& syndrome) const {
  auto it = rows.find(syndrome);
  if (it == rows.end()) throw std::out_of_range("syndrome " + syndrome + " has no correction row");
  return it->second;
}

nlohmann::json table_to_json(const CorrectionTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [syndrome, c] : table.rows) rows.push_back({{"syndrome", syndrome}, {"correction", std::string(1, c)}});
  return {{"subset", table.subset}, {"secret_register", table.secret_register}, {"rows", rows}};
}

CorrectionTable table_from_json(const nlohmann::json& j) {
  CorrectionTable t;
  t.subset = j.at("subset").get<QubitList>();
  t.secret_register = j.value("secret_register", 0);
  size_t width = 0;
  for (const auto& row : j.at("rows")) {
    const std::string syndrome = row.at("syndrome").get<std::string>();
    const std::string corr = row.at("correction").get<std::string>();
    if (syndrome.find_first_not_of("01") != std::string::npos) {
      throw std::invalid_argument("invalid syndrome '" + syndrome + "'");
    }
    if (width != 0 && syndrome.size() != width) throw std::invalid_argument("syndromes of unequal width");
    width = syndrome.size();
    if (corr.size() != 1 || !valid_letter(corr[0])) throw std::invalid_argument("invalid correction '" + corr + "'");
    auto [it, inserted] = t.rows.emplace(syndrome, corr[0]);
    if (!inserted && it->second != corr[0]) {
      throw InconsistentTableError("syndrome " + syndrome + " listed with two corrections");
    }
  }
  return t;
}

Derivation derive_entries(const Circuit& encoding, const GeneratorSet& gens, int secret_register,
                          const QubitList& subset) {
  const int n = encoding.n_qubits();
  const Circuit inverse = encoding.inverse();
  const int k = static_cast<int>(subset.size());
  Derivation d;
  std::map<std::string, char> seen;
  for (uint64_t code = 0; code < (uint64_t{1} << (2 * k)); ++code) {
    PauliString e(n);
    for (int j = 0; j < k; ++j) e.set_letter(subset[j], kLetters[(code >> (2 * (k - 1 - j))) & 3]);
    DerivedEntry entry{e, syndrome_string(syndrome_of(e, gens)), conjugate_pauli(inverse, e.adjoint()), 'I'};
    entry.correction = entry.full_correction.letter(secret_register);
    auto [it, inserted] = seen.emplace(entry.syndrome, entry.correction);
    if (!inserted && it->second != entry.correction) {
      if (d.conflicts.empty() || d.conflicts.back() != entry.syndrome) d.conflicts.push_back(entry.syndrome);
    }
    d.entries.push_back(std::move(entry));
  }
  return d;
}

CorrectionTable derive_correction_table(const Circuit& encoding, const GeneratorSet& gens, int secret_register,
                                        const QubitList& subset) {
  Derivation d = derive_entries(encoding, gens, secret_register, subset);
  if (!d.consistent()) {
    throw InconsistentTableError("erasure of the subset is not correctable: syndrome " + d.conflicts.front() +
                                 " needs two different corrections");
  }
  CorrectionTable t{subset, secret_register, {}};
  for (const auto& e : d.entries) t.rows.emplace(e.syndrome, e.correction);
  return t;
}

TableReport table_consistency_check(const CorrectionTable& derived, const CorrectionTable& stored) {
  if (derived.subset != stored.subset) throw std::invalid_argument("tables cover different erasure subsets");
  TableReport report;
  for (const auto& [syndrome, c] : derived.rows) {
    ++report.rows_compared;
    auto it = stored.rows.find(syndrome);
    if (it == stored.rows.end()) {
      report.mismatches.push_back({syndrome, c, '-'});
    } else if (it->second != c) {
      report.mismatches.push_back({syndrome, c, it->second});
    }
  }
  for (const auto& [syndrome, c] : stored.rows) {
    if (!derived.rows.count(syndrome)) {
      ++report.rows_compared;
      report.mismatches.push_back({syndrome, '-', c});
    }
  }
  return report;
}

std::optional<LinearCorrection> fit_linear_correction(const CorrectionTable& table) {
  if (table.rows.empty()) return LinearCorrection{};
  const int m = static_cast<int>(table.rows.begin()->first.size());
  std::vector<std::vector<int>> rows;
  std::vector<int> tx, tz;
  for (const auto& [syndrome, c] : table.rows) {
    std::vector<int> r;
    for (char ch : syndrome) r.push_back(ch == '1');
    rows.push_back(std::move(r));
    tx.push_back(c == 'X' || c == 'Y');
    tz.push_back(c == 'Z' || c == 'Y');
  }
  auto x = solve_gf2(rows, tx, m);
  auto z = solve_gf2(rows, tz, m);
  if (!x || !z) return std::nullopt;
  return LinearCorrection{*x, *z};
}

}  // namespace qss
