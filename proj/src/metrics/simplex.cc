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

#include "qss/metrics/simplex.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace qss {

std::vector<double> project_to_simplex(const std::vector<double>& v, double total) {
  if (v.empty()) return {};
  std::vector<double> u(v);
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0, tau = 0.0;
  for (size_t k = 0; k < u.size(); ++k) {
    cumulative += u[k];
    const double t = (cumulative - total) / static_cast<double>(k + 1);
    if (u[k] - t > 0.0) tau = t;
  }
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = std::max(v[i] - tau, 0.0);
  return out;
}

std::vector<double> nearest_probability(const std::vector<double>& quasi) {
  for (double x : quasi) {
    if (!std::isfinite(x)) throw std::invalid_argument("quasi-probabilities must be finite");
  }
  const double sum = std::accumulate(quasi.begin(), quasi.end(), 0.0);
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("quasi-probabilities sum to " + std::to_string(sum));
  return project_to_simplex(quasi, 1.0);
}

}  // namespace qss
