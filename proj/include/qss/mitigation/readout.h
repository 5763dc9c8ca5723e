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
#include <string>
#include <vector>

#include <json.hpp>

#include "qss/qcore/simulator.h"

namespace qss {

/// p01 = P(read 1 | prepared 0), p10 = P(read 0 | prepared 1).
struct QubitReadout {
  double p01 = 0.0;
  double p10 = 0.0;
  bool operator==(const QubitReadout&) const = default;
};

/// Uncorrelated per-qubit readout model; qubits[0] is qubit 1.
struct ReadoutCalibration {
  std::vector<QubitReadout> qubits;

  /// Validates every probability in [0, 1].
  static ReadoutCalibration make(std::vector<QubitReadout> qubits);
  static ReadoutCalibration uniform(int n_qubits, double p01, double p10);

  int n_qubits() const { return static_cast<int>(qubits.size()); }
  /// P(measured | prepared) for qubit q (1-based).
  double prob(int q, int measured, int prepared) const;
  /// Entry A[measured][prepared] of the full tensor-product assignment matrix.
  double entry(const std::string& measured, const std::string& prepared) const;

  bool operator==(const ReadoutCalibration&) const = default;
};

nlohmann::json calibration_to_json(const ReadoutCalibration& calib);
ReadoutCalibration calibration_from_json(const nlohmann::json& j);

/// Bitstring -> weight. Probability maps hold nonnegative weights summing
/// to 1; quasi-distributions may hold negative weights.
using Distribution = std::map<std::string, double>;
using QuasiDistribution = Distribution;

/// Samples ideal outcomes and flips each bit by its confusion matrix.
Counts corrupt_counts(const Distribution& ideal, const ReadoutCalibration& calib, int shots, Rng& rng);

/// Exact noisy distribution A p over all 2^n strings (dense; reference use).
Distribution apply_readout(const Distribution& ideal, const ReadoutCalibration& calib);

Distribution normalize_counts(const Counts& counts);
double total_variation(const Distribution& a, const Distribution& b);

}  // namespace qss
