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

#include "qss/mitigation/readout.h"

namespace qss {

struct MitigationStats {
  bool iterative = false;
  int iterations = 0;
  /// Relative residual ||A x - y|| / ||y|| of the returned solution.
  double residual = 0.0;
};

inline constexpr size_t kDirectSolveLimit = 10;
inline constexpr double kGmresTolerance = 1e-8;
inline constexpr int kGmresMaxIterations = 200;

/// Solves A x = y on the observed bitstrings only, with A the
/// tensor-product assignment matrix restricted to those strings and each
/// column renormalized over them. Entries are computed on demand. Up to
/// kDirectSolveLimit strings use a dense LU solve; larger systems use
/// unpreconditioned GMRES. The result is rescaled to total weight 1.
/// Throws std::domain_error if the restricted system is singular.
QuasiDistribution mitigate(const Counts& counts, const ReadoutCalibration& calib, MitigationStats* stats = nullptr);
QuasiDistribution mitigate(const Distribution& observed, const ReadoutCalibration& calib,
                           MitigationStats* stats = nullptr);

/// Closest probability map (L2) on the quasi-distribution's support.
Distribution to_probabilities(const QuasiDistribution& quasi);

}  // namespace qss
