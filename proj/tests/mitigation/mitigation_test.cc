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

#include <gtest/gtest.h>

#include <cmath>

#include "qss/mitigation/m3.h"
#include "qss/qcore/simulator.h"
#include "test_support.h"

namespace qss {
namespace {

Distribution random_distribution(int n, Rng& rng, int support) {
  Distribution d;
  double total = 0.0;
  for (int k = 0; k < support; ++k) {
    const double w = testing::uniform(rng, 0.1, 1.0);
    d[bitstring(uniform_index(rng, uint64_t{1} << n), n)] += w;
    total += w;
  }
  for (auto& [b, w] : d) w /= total;
  return d;
}

double linf(const Distribution& a, const Distribution& b) {
  double m = 0.0;
  for (const auto& [k, v] : a) m = std::max(m, std::abs(v - (b.count(k) ? b.at(k) : 0.0)));
  for (const auto& [k, v] : b) m = std::max(m, std::abs(v - (a.count(k) ? a.at(k) : 0.0)));
  return m;
}

// Dense inverse of the full assignment matrix.
Distribution dense_inverse(const Distribution& observed, const ReadoutCalibration& calib) {
  const int n = calib.n_qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXd a(dim, dim);
  Eigen::VectorXd y = Eigen::VectorXd::Zero(dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = calib.entry(bitstring(i, n), bitstring(j, n));
  for (const auto& [b, w] : observed) y(static_cast<Eigen::Index>(parse_bitstring(b))) = w;
  const Eigen::VectorXd x = a.partialPivLu().solve(y);
  Distribution out;
  for (Eigen::Index i = 0; i < dim; ++i) out[bitstring(i, n)] = x(i);
  return out;
}

TEST(Calibration, Validation) {
  EXPECT_THROW(ReadoutCalibration::make({{1.2, 0.0}}), std::invalid_argument);
  EXPECT_THROW(ReadoutCalibration::make({{0.0, -0.1}}), std::invalid_argument);
  const ReadoutCalibration c = ReadoutCalibration::uniform(3, 0.02, 0.05);
  EXPECT_EQ(calibration_from_json(calibration_to_json(c)), c);
  EXPECT_NEAR(c.entry("000", "000"), 0.98 * 0.98 * 0.98, 1e-15);
}

TEST(CorruptCounts, IdentityCalibrationSamplesIdeal) {
  Rng rng(1);
  const Counts c = corrupt_counts({{"01", 1.0}}, ReadoutCalibration::uniform(2, 0.0, 0.0), 500, rng);
  EXPECT_EQ(c.at("01"), 500);
  EXPECT_EQ(c.size(), 1u);
}

TEST(CorruptCounts, CertainDecayReadsZero) {
  Rng rng(2);
  const auto calib = ReadoutCalibration::make({{0.0, 1.0}, {0.0, 0.0}});
  const Counts c = corrupt_counts({{"11", 0.5}, {"01", 0.5}}, calib, 1000, rng);
  for (const auto& [bits, n] : c) EXPECT_EQ(bits[0], '0');
}

TEST(CorruptCounts, SymmetricFlipsOnZeros) {
  Rng rng(3);
  const int shots = 10000;
  const Counts c = corrupt_counts({{"00", 1.0}}, ReadoutCalibration::uniform(2, 0.05, 0.05), shots, rng);
  const double p = 0.95 * 0.95;
  EXPECT_NEAR(c.at("00"), shots * p, 3.0 * std::sqrt(shots * p * (1 - p)));
}

TEST(CorruptCounts, WidthMismatchThrows) {
  Rng rng(4);
  EXPECT_THROW(corrupt_counts({{"0", 1.0}}, ReadoutCalibration::uniform(2, 0.0, 0.0), 10, rng), std::invalid_argument);
}

TEST(Mitigate, IdentityCalibrationNormalizes) {
  const QuasiDistribution q = mitigate(Counts{{"00", 30}, {"11", 70}}, ReadoutCalibration::uniform(2, 0.0, 0.0));
  EXPECT_NEAR(q.at("00"), 0.3, 1e-12);
  EXPECT_NEAR(q.at("11"), 0.7, 1e-12);
}

TEST(Mitigate, ExactExpectationInverts) {
  Rng rng(5);
  for (int n : {2, 4, 7}) {
    const ReadoutCalibration calib = ReadoutCalibration::uniform(n, 0.03, 0.05);
    const Distribution ideal = random_distribution(n, rng, 6);
    EXPECT_LE(linf(mitigate(apply_readout(ideal, calib), calib), ideal), 1e-6) << n;
  }
}

// Calibrated before freezing: the acceptance run improves in 100 of 100 trials.
TEST(Mitigate, SampledCountsMoveTowardIdeal) {
  Rng rng(6);
  const ReadoutCalibration calib = ReadoutCalibration::uniform(3, 0.03, 0.03);
  int better = 0;
  for (int k = 0; k < 100; ++k) {
    const Distribution ideal = random_distribution(3, rng, 3);
    const Counts raw = corrupt_counts(ideal, calib, 1024, rng);
    better += total_variation(to_probabilities(mitigate(raw, calib)), ideal) <
              total_variation(normalize_counts(raw), ideal);
  }
  EXPECT_GE(better, 95);
}

TEST(Mitigate, FullSupportMatchesDenseInverse) {
  Rng rng(7);
  for (int k = 0; k < 20; ++k) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 4));
    std::vector<QubitReadout> q;
    for (int i = 0; i < n; ++i) q.push_back({testing::uniform(rng, 0, 0.1), testing::uniform(rng, 0, 0.1)});
    const ReadoutCalibration calib = ReadoutCalibration::make(q);
    Distribution observed;
    for (uint64_t i = 0; i < (uint64_t{1} << n); ++i) observed[bitstring(i, n)] = testing::uniform(rng, 0.1, 1.0);
    double total = 0;
    for (auto& [b, w] : observed) total += w;
    for (auto& [b, w] : observed) w /= total;
    EXPECT_LE(linf(mitigate(observed, calib), dense_inverse(observed, calib)), 10 * kGmresTolerance);
  }
}

TEST(Mitigate, IterativePathAtHighWidth) {
  Rng rng(8);
  const ReadoutCalibration calib = ReadoutCalibration::uniform(6, 0.02, 0.04);
  const Distribution ideal = random_distribution(6, rng, 20);
  MitigationStats stats;
  const QuasiDistribution q = mitigate(apply_readout(ideal, calib), calib, &stats);
  EXPECT_TRUE(stats.iterative);
  EXPECT_LE(stats.residual, kGmresTolerance);
  EXPECT_LE(linf(q, ideal), 1e-6);
  double total = 0;
  for (const auto& [b, w] : q) total += w;
  EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(ToProbabilities, NonnegativeUnchanged) {
  const Distribution d = {{"00", 0.4}, {"01", 0.6}};
  EXPECT_LE(linf(to_probabilities(d), d), 1e-15);
}

TEST(ToProbabilities, ClipsNegativeWeight) {
  const Distribution p = to_probabilities({{"00", 1.05}, {"11", -0.05}});
  EXPECT_NEAR(p.at("00"), 1.0, 1e-15);
  EXPECT_NEAR(p.count("11") ? p.at("11") : 0.0, 0.0, 1e-15);
}

TEST(ToProbabilities, UniformUnchanged) {
  const Distribution u = {{"00", 0.25}, {"01", 0.25}, {"10", 0.25}, {"11", 0.25}};
  EXPECT_LE(linf(to_probabilities(u), u), 1e-15);
}

TEST(MitigationProperty, WeightPreserved) {
  Rng rng(9);
  for (int k = 0; k < 100; ++k) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 6));
    const ReadoutCalibration calib = ReadoutCalibration::uniform(n, testing::uniform(rng, 0, 0.1),
                                                                 testing::uniform(rng, 0, 0.1));
    const Counts raw = corrupt_counts(random_distribution(n, rng, 5), calib, 256, rng);
    double total = 0;
    for (const auto& [b, w] : mitigate(raw, calib)) total += w;
    EXPECT_NEAR(total, 1.0, 1e-9);
  }
}

TEST(MitigationProperty, CorruptedDistributionStaysNormalized) {
  Rng rng(10);
  for (int k = 0; k < 50; ++k) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 5));
    const ReadoutCalibration calib = ReadoutCalibration::uniform(n, testing::uniform(rng, 0, 0.2), 0.1);
    double total = 0;
    for (const auto& [b, w] : apply_readout(random_distribution(n, rng, 4), calib)) {
      total += w;
      EXPECT_GE(w, 0.0);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

}  // namespace
}  // namespace qss
