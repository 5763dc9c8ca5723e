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

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qss/qcore/circuit.h"
#include "qss/stabilizer/generators.h"

namespace qss {

/// Syndrome (bit string, generator order) to the Pauli letter R_k applied
/// to the secret register after U^dagger.
struct CorrectionTable {
  QubitList subset;
  int secret_register = 0;
  std::map<std::string, char> rows;

  /// Correction for a syndrome; throws std::out_of_range if absent.
  char correction(const std::string& syndrome) const;
  bool operator==(const CorrectionTable&) const = default;
};

nlohmann::json table_to_json(const CorrectionTable& table);
CorrectionTable table_from_json(const nlohmann::json& j);

/// Thrown when two errors share a syndrome but need different corrections.
class InconsistentTableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DerivedEntry {
  PauliString error;
  std::string syndrome;
  /// U^dagger E^dagger U on the full register.
  PauliString full_correction;
  char correction;
};

struct Derivation {
  std::vector<DerivedEntry> entries;
  /// Syndromes that received conflicting corrections.
  std::vector<std::string> conflicts;
  bool consistent() const { return conflicts.empty(); }
};

/// Enumerates all 4^|subset| Pauli errors on `subset` (first subset qubit
/// most significant, letters in I, X, Y, Z order).
Derivation derive_entries(const Circuit& encoding, const GeneratorSet& gens, int secret_register,
                          const QubitList& subset);

/// Throws InconsistentTableError if the subset is not correctable.
CorrectionTable derive_correction_table(const Circuit& encoding, const GeneratorSet& gens, int secret_register,
                                        const QubitList& subset);

struct TableMismatch {
  std::string syndrome;
  /// '-' marks a row missing from that table.
  char derived;
  char stored;
};

struct TableReport {
  std::vector<TableMismatch> mismatches;
  size_t rows_compared = 0;
  bool equal() const { return mismatches.empty(); }
};

/// Row-by-row comparison. Corrections are single letters on the secret
/// register, so equality of letters is equality modulo phase.
TableReport table_consistency_check(const CorrectionTable& derived, const CorrectionTable& stored);

/// GF(2)-linear decoder: the correction's X part is x[j]·b summed over j and
/// its Z part z[j]·b likewise, b being the syndrome bits.
struct LinearCorrection {
  std::vector<int> x;
  std::vector<int> z;
};

/// Fits a linear decoder to every row; nullopt if none exists.
std::optional<LinearCorrection> fit_linear_correction(const CorrectionTable& table);

}  // namespace qss
