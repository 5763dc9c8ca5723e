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

/// Pauli-basis measurement record: for every setting in {X,Y,Z}^n the counts
/// of each outcome bitstring, `shots` per setting.
struct TomographyData {
  int n_qubits = 0;
  int shots = 0;
  std::map<std::string, Counts> settings;
};

/// Outcome probabilities per setting, indexed by basis index.
using TomographyProbabilities = std::map<std::string, std::vector<double>>;

/// All 3^n setting labels in lexicographic order over X, Y, Z.
std::vector<std::string> tomography_settings(int n_qubits);

/// Rotation into the Z basis for a setting: H for X, S^dagger then H for Y.
Circuit tomography_rotation(const std::string& setting);

TomographyProbabilities tomography_probabilities(const DensityMatrix& state);
TomographyData tomography_collect(const DensityMatrix& state, int shots, Rng& rng);

/// Linear inversion from Pauli expectations (each averaged over every
/// compatible setting), then the Frobenius-nearest unit-trace PSD matrix.
DensityMatrix tomography_reconstruct(const TomographyData& data);
DensityMatrix tomography_reconstruct(const TomographyProbabilities& probs, int n_qubits);

/// Frobenius-nearest density matrix to a Hermitian matrix: eigenvalues
/// projected onto the probability simplex.
DensityMatrix nearest_density_matrix(const Matrix& hermitian);

nlohmann::json tomography_to_json(const TomographyData& data);
TomographyData tomography_from_json(const nlohmann::json& j);

}  // namespace qss
