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

#include "qss/qcore/simulator.h"
#include "test_support.h"

namespace qss {
namespace {

StateVector bell() {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return StateVector::from_amplitudes(v);
}

TEST(State, RejectsUnnormalizedAndBadLength) {
  Vector v = Vector::Ones(2);
  EXPECT_THROW(StateVector::from_amplitudes(v), std::invalid_argument);
  Vector w = Vector::Ones(3) / std::sqrt(3.0);
  EXPECT_THROW(StateVector::from_amplitudes(w), std::invalid_argument);
}

TEST(State, DensityValidation) {
  Matrix m = Matrix::Identity(2, 2);
  EXPECT_THROW(DensityMatrix::from_matrix(m), std::domain_error);
  Matrix neg(2, 2);
  neg << 1.5, 0, 0, -0.5;
  EXPECT_THROW(DensityMatrix::from_matrix(neg), std::domain_error);
  EXPECT_NO_THROW(DensityMatrix::from_matrix(Matrix::Identity(2, 2) / 2.0));
}

TEST(State, BitstringsAreMsbFirst) {
  EXPECT_EQ(bitstring(1, 3), "001");
  EXPECT_EQ(parse_bitstring("100"), 4u);
  EXPECT_EQ(StateVector::from_bitstring("10")[2], Complex(1.0, 0.0));
}

TEST(Circuit, EmptyLeavesStateUnchanged) {
  Rng rng(1);
  const StateVector psi = testing::random_state(3, rng);
  const auto run = apply_circuit(psi, Circuit(3), rng);
  EXPECT_NEAR((run.state.amplitudes() - psi.amplitudes()).norm(), 0.0, 1e-15);
}

TEST(Circuit, MeasureOfPlusIsFair) {
  Circuit c(1, 1);
  c.h(1).measure(1, 0);
  Rng rng(2);
  int ones = 0;
  const int runs = 10000;
  for (int k = 0; k < runs; ++k) ones += apply_circuit(StateVector::zero(1), c, rng).clbits[0];
  EXPECT_NEAR(ones, runs / 2, 3.0 * std::sqrt(runs * 0.25));
}

TEST(Circuit, FeedForwardFlipsBack) {
  Circuit c(1, 1);
  c.measure(1, 0).conditional(GateSpec::make(GateKind::kX, {1}), 0, 1);
  Rng rng(3);
  const auto run = apply_circuit(StateVector::basis(1, 1), c, rng);
  EXPECT_EQ(run.clbits[0], 1);
  EXPECT_NEAR(std::abs(run.state[0]), 1.0, 1e-12);
}

TEST(Circuit, DensityFeedForwardMatchesStateVector) {
  Circuit c(2, 1);
  c.h(1).cx(1, 2).measure(1, 0).conditional(GateSpec::make(GateKind::kX, {2}), 0, 1);
  const Matrix avg = average_circuit(DensityMatrix::zero(2).matrix(), 2, c);
  const DensityMatrix q2 = partial_trace(DensityMatrix::from_raw(2, avg), {2});
  EXPECT_NEAR(q2(0, 0).real(), 1.0, 1e-12);
}

TEST(Circuit, ResetIsExactChannelOnDensityMatrix) {
  Circuit c(2);
  c.reset(2);
  Rng rng(4);
  const auto run = apply_circuit(DensityMatrix::from_pure(bell()), c, rng);
  Matrix expected = Matrix::Zero(4, 4);
  expected(0, 0) = expected(2, 2) = 0.5;
  EXPECT_LT(testing::max_abs(run.state.matrix() - expected), 1e-12);
}

TEST(PartialTrace, BellMarginalIsMixed) {
  const DensityMatrix r = partial_trace(DensityMatrix::from_pure(bell()), {1});
  EXPECT_LT(testing::max_abs(r.matrix() - Matrix::Identity(2, 2) / 2.0), 1e-12);
}

TEST(PartialTrace, ProductFactorizes) {
  Rng rng(5);
  const DensityMatrix a = testing::random_density(1, rng), b = testing::random_density(2, rng);
  const DensityMatrix r = partial_trace(a.tensor(b), {1});
  EXPECT_LT(testing::max_abs(r.matrix() - a.matrix()), 1e-12);
  const DensityMatrix rb = partial_trace(a.tensor(b), {2, 3});
  EXPECT_LT(testing::max_abs(rb.matrix() - b.matrix()), 1e-12);
}

TEST(PartialTrace, RejectsEmptyKeep) {
  EXPECT_THROW(partial_trace(DensityMatrix::zero(2), {}), std::invalid_argument);
}

TEST(MeasureAll, EigenstateAlwaysSame) {
  Rng rng(6);
  const Counts c = measure_all(StateVector::zero(3), 1024, rng);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.at("000"), 1024);
}

TEST(MeasureAll, PlusIsBinomial) {
  Rng rng(7);
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  const Counts c = measure_all(StateVector::from_amplitudes(v), 10000, rng);
  EXPECT_NEAR(c.at("0"), 5000, 3 * 50);
  EXPECT_NEAR(c.at("1"), 5000, 3 * 50);
}

TEST(MeasureAll, BellSupport) {
  Rng rng(8);
  for (const auto& [bits, n] : measure_all(bell(), 2000, rng)) EXPECT_TRUE(bits == "00" || bits == "11");
}

TEST(Fidelity, Examples) {
  Rng rng(9);
  const StateVector psi = testing::random_state(2, rng);
  const StateVector rotated = StateVector::from_amplitudes(psi.amplitudes() * std::polar(1.0, 0.8));
  EXPECT_NEAR(fidelity(psi, rotated), 1.0, 1e-12);
  EXPECT_NEAR(fidelity(StateVector::basis(1, 0), StateVector::basis(1, 1)), 0.0, 1e-12);
  Vector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(fidelity(StateVector::zero(1), StateVector::from_amplitudes(plus)), 0.5, 1e-12);
  EXPECT_THROW(fidelity(StateVector::zero(1), StateVector::zero(2)), std::invalid_argument);
}

TEST(Fidelity, MixedIsSymmetricAndBounded) {
  Rng rng(10);
  for (int k = 0; k < 20; ++k) {
    const DensityMatrix a = testing::random_density(2, rng, 3), b = testing::random_density(2, rng, 2);
    const double f = fidelity(a, b);
    EXPECT_NEAR(f, fidelity(b, a), 1e-9);
    EXPECT_GE(f, -1e-12);
    EXPECT_LE(f, 1.0 + 1e-9);
    EXPECT_NEAR(fidelity(a, a), 1.0, 1e-9);
  }
}

TEST(Fidelity, MixedAgreesWithPureOverlap) {
  Rng rng(11);
  const StateVector a = testing::random_state(2, rng), b = testing::random_state(2, rng);
  EXPECT_NEAR(fidelity(DensityMatrix::from_pure(a), DensityMatrix::from_pure(b)), fidelity(a, b), 1e-9);
  EXPECT_NEAR(fidelity(DensityMatrix::from_pure(a), b), fidelity(a, b), 1e-12);
}

}  // namespace
}  // namespace qss
