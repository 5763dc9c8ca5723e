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

#include "qss/qcore/rng.h"

namespace qss {

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

inline constexpr int kBootstrapResamples = 10000;
inline constexpr double kConfidence = 0.99;

/// Linear-interpolated quantile of already sorted data, q in [0, 1].
double sorted_quantile(const std::vector<double>& sorted, double q);

/// Percentile interval of the resampled mean (nonparametric bootstrap).
Interval bootstrap_mean(const std::vector<double>& values, Rng& rng, int resamples = kBootstrapResamples,
                        double confidence = kConfidence);

/// Percentile interval for a success fraction by resampling `shots`
/// Bernoulli(successes / shots) draws.
Interval bootstrap_rate(int successes, int shots, Rng& rng, int resamples = kBootstrapResamples,
                        double confidence = kConfidence);

/// Percentile interval of precomputed replicate statistics.
Interval percentile_interval(std::vector<double> replicates, double confidence = kConfidence);

/// Widens `iv` so that it contains `point`.
Interval cover(Interval iv, double point);

}  // namespace qss
