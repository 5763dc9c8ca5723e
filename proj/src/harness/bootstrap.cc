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

#include "qss/harness/bootstrap.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qss {

double sorted_quantile(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) throw std::invalid_argument("quantile of empty data");
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const size_t lo = static_cast<size_t>(std::floor(pos));
  const size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

Interval percentile_interval(std::vector<double> replicates, double confidence) {
  std::sort(replicates.begin(), replicates.end());
  const double tail = (1.0 - confidence) / 2.0;
  return {sorted_quantile(replicates, tail), sorted_quantile(replicates, 1.0 - tail)};
}

Interval bootstrap_mean(const std::vector<double>& values, Rng& rng, int resamples, double confidence) {
  if (values.empty()) throw std::invalid_argument("bootstrap of empty data");
  std::vector<double> reps(resamples);
  for (double& r : reps) {
    double sum = 0.0;
    for (size_t i = 0; i < values.size(); ++i) sum += values[uniform_index(rng, values.size())];
    r = sum / static_cast<double>(values.size());
  }
  return percentile_interval(std::move(reps), confidence);
}

Interval bootstrap_rate(int successes, int shots, Rng& rng, int resamples, double confidence) {
  if (shots < 1) throw std::invalid_argument("bootstrap needs at least one shot");
  const double p = static_cast<double>(successes) / shots;
  std::vector<double> reps(resamples);
  for (double& r : reps) {
    int hits = 0;
    for (int s = 0; s < shots; ++s) hits += uniform01(rng) < p ? 1 : 0;
    r = static_cast<double>(hits) / shots;
  }
  return percentile_interval(std::move(reps), confidence);
}

Interval cover(Interval iv, double point) { return {std::min(iv.low, point), std::max(iv.high, point)}; }

}  // namespace qss
