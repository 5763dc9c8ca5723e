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

#include <vector>

namespace qss {

/// Euclidean projection of `v` onto {x >= 0, sum x = total} by the
/// sort-and-threshold algorithm.
std::vector<double> project_to_simplex(const std::vector<double>& v, double total = 1.0);

/// Closest probability vector in the L2 norm to a quasi-probability vector.
/// Entries must be finite and sum to 1 within 1e-9.
std::vector<double> nearest_probability(const std::vector<double>& quasi);

}  // namespace qss
