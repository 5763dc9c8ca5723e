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
#include <numeric>

#include "qss/channels/channel.h"
#include "qss/metrics/entanglement_fidelity.h"
#include "qss/metrics/simplex.h"
#include "qss/metrics/swap_test.h"
#include "qss/metrics/tomography.h"
#include "qss/qcore/simulator.h"
#include "test_support.h"

namespace qss {
namespace {

StateVector plus() {
  Vector v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return StateVector::from_amplitudes(v);
}

StateVector bell() {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return StateVector::from_amplitudes(v);
}

TEST(SwapTest, IdenticalStates) {
  Rng rng(1);
  const StateVector psi = testing::random_state(2, rng);
  const SwapTestResult r = swap_test(psi, psi, 1000, rng);
  EXPECT_NEAR(r.exact_p0, 1.0, 1e-12);
  EXPECT_EQ(*r.sampled_rate, 1.0);
}

TEST(SwapTest, OrthogonalStates) {
  Rng rng(2);
  EXPECT_NEAR(swap_test(StateVector::basis(1, 0), StateVector::basis(1, 1), std::nullopt, rng).exact_p0, 0.5, 1e-12);
}

TEST(SwapTest, HalfOverlap) {
  Rng rng(3);
  const SwapTestResult r = swap_test(StateVector::basis(1, 0), plus(), std::nullopt, rng);
  EXPECT_NEAR(r.exact_p0, 0.75, 1e-12);
  EXPECT_FALSE(r.sampled_rate.has_value());
}

TEST(SwapTest, CircuitAgreesWithFormula) {
  Rng rng(4);
  for (int k = 0; k < 20; ++k) {
    const StateVector a = testing::random_qubit_secret(rng), b = testing::random_qubit_secret(rng);
    const StateVector joint = StateVector::zero(1).tensor(a).tensor(b);
    Circuit c = swap_test_circuit(1);
    const Matrix out = average_circuit(DensityMatrix::from_pure(joint).matrix(), 3, c);
    const double p0 = partial_trace(DensityMatrix::from_raw(3, out), {1})(0, 0).real();
    EXPECT_NEAR(p0, swap_test(a, b, std::nullopt, rng).exact_p0, 1e-12);
  }
}

TEST(SwapTest, SampledRateWithinThreeSigma) {
  Rng rng(5);
  const SwapTestResult r = swap_test(StateVector::basis(1, 0), plus(), 10000, rng);
  EXPECT_NEAR(*r.sampled_rate, 0.75, 3.0 * std::sqrt(0.75 * 0.25 / 10000));
}

TEST(EntanglementFidelity, Identity) { EXPECT_NEAR(entanglement_fidelity(Channel::identity(1), 2), 1.0, 1e-12); }

TEST(EntanglementFidelity, FullyDepolarizing) {
  EXPECT_NEAR(entanglement_fidelity(depolarizing(1.0), 2), 0.25, 1e-12);
}

TEST(EntanglementFidelity, ConstantChannel) {
  Rng rng(6);
  const Matrix sigma = testing::random_density(1, rng).matrix();
  // Replacement channel K_ij = sqrt(lambda_i) |e_i><j|.
  Eigen::SelfAdjointEigenSolver<Matrix> es(sigma);
  std::vector<Matrix> kraus;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      Matrix k = Matrix::Zero(2, 2);
      k.col(j) = std::sqrt(std::max(0.0, es.eigenvalues()(i))) * es.eigenvectors().col(i);
      kraus.push_back(k);
    }
  }
  EXPECT_NEAR(entanglement_fidelity(Channel::make(kraus), 2), 0.25, 1e-12);
}

TEST(EntanglementFidelity, LinearInMixtures) {
  Rng rng(7);
  for (int k = 0; k < 20; ++k) {
    const double p = testing::uniform(rng, 0, 1);
    // depolarizing(p) = (1-p) id + p * full depolarization.
    EXPECT_NEAR(entanglement_fidelity(depolarizing(p), 2), (1 - p) * 1.0 + p * 0.25, 1e-12);
  }
}

TEST(EntanglementFidelity, PhiPlusShape) {
  const StateVector s = phi_plus(2, 1);
  EXPECT_EQ(s.n_qubits(), 2);
  EXPECT_NEAR(fidelity(s, bell()), 1.0, 1e-15);
  // Qutrit embedded in two qubits per side.
  EXPECT_EQ(phi_plus(3, 2).n_qubits(), 4);
  EXPECT_NEAR(leakage(Channel::identity(2), 3), 0.0, 1e-12);
}

TEST(Tomography, ZeroInZSetting) {
  Rng rng(8);
  const TomographyData d = tomography_collect(DensityMatrix::zero(1), 100, rng);
  EXPECT_EQ(d.settings.at("Z").at("0"), 100);
  EXPECT_EQ(d.settings.at("Z").size(), 1u);
}

TEST(Tomography, PlusInXSetting) {
  Rng rng(9);
  const TomographyData d = tomography_collect(DensityMatrix::from_pure(plus()), 100, rng);
  EXPECT_EQ(d.settings.at("X").at("0"), 100);
}

TEST(Tomography, BellInZZSetting) {
  Rng rng(10);
  const TomographyData d = tomography_collect(DensityMatrix::from_pure(bell()), 500, rng);
  for (const auto& [bits, n] : d.settings.at("ZZ")) EXPECT_TRUE(bits == "00" || bits == "11") << bits;
  EXPECT_EQ(tomography_settings(2).size(), 9u);
}

TEST(Tomography, ExactProbabilitiesRecoverState) {
  const DensityMatrix zero = DensityMatrix::zero(1);
  EXPECT_LT(testing::max_abs(tomography_reconstruct(tomography_probabilities(zero), 1).matrix() - zero.matrix()), 1e-10);
  const DensityMatrix b = DensityMatrix::from_pure(bell());
  EXPECT_NEAR(fidelity(tomography_reconstruct(tomography_probabilities(b), 2), b), 1.0, 1e-10);
}

// Calibrated over 100 seeded trials before freezing: minimum fidelity 0.968.
TEST(Tomography, FiniteShotReconstruction) {
  Rng rng(31);
  int good = 0;
  for (int k = 0; k < 100; ++k) {
    const DensityMatrix rho = DensityMatrix::from_pure(testing::random_state(2, rng));
    good += fidelity(tomography_reconstruct(tomography_collect(rho, 1024, rng)), rho) >= 0.9;
  }
  EXPECT_GE(good, 95);
}

TEST(Tomography, JsonRoundTrip) {
  Rng rng(11);
  const TomographyData d = tomography_collect(testing::random_density(2, rng), 64, rng);
  const TomographyData back = tomography_from_json(tomography_to_json(d));
  EXPECT_EQ(back.n_qubits, 2);
  EXPECT_EQ(back.settings, d.settings);
}

TEST(Tomography, NearestDensityIsValid) {
  Matrix h = Matrix::Zero(2, 2);
  h(0, 0) = 1.2;
  h(1, 1) = -0.2;
  const DensityMatrix r = nearest_density_matrix(h);
  EXPECT_NEAR(r(0, 0).real(), 1.0, 1e-12);
  EXPECT_NEAR(r(1, 1).real(), 0.0, 1e-12);
}

TEST(TomographyProperty, ExactRoundTripOnRandomStates) {
  Rng rng(12);
  for (int k = 0; k < 30; ++k) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 3));
    const DensityMatrix rho = testing::random_density(n, rng, 1 + static_cast<int>(uniform_index(rng, 3)));
    EXPECT_LT(testing::max_abs(tomography_reconstruct(tomography_probabilities(rho), n).matrix() - rho.matrix()),
              1e-10);
  }
}

// Brute-force least squares over a grid on the simplex.
std::vector<double> grid_oracle(const std::vector<double>& q) {
  const int steps = 1000;
  std::vector<double> best;
  double best_d = 1e300;
  for (int i = 0; i <= steps; ++i) {
    const std::vector<double> p = {i / double(steps), 1.0 - i / double(steps)};
    const double d = (p[0] - q[0]) * (p[0] - q[0]) + (p[1] - q[1]) * (p[1] - q[1]);
    if (d < best_d) best_d = d, best = p;
  }
  return best;
}

TEST(Simplex, ValidDistributionUnchanged) {
  const std::vector<double> p = {0.2, 0.3, 0.5};
  const auto out = nearest_probability(p);
  for (size_t i = 0; i < p.size(); ++i) EXPECT_NEAR(out[i], p[i], 1e-15);
}

TEST(Simplex, ClipsNegativeEntry) {
  const auto out = nearest_probability({1.1, -0.1});
  const auto oracle = grid_oracle({1.1, -0.1});
  EXPECT_NEAR(out[0], 1.0, 1e-15);
  EXPECT_NEAR(out[1], 0.0, 1e-15);
  EXPECT_NEAR(out[0], oracle[0], 1e-3);
}

TEST(Simplex, UniformUnchanged) {
  const auto out = nearest_probability(std::vector<double>(4, 0.25));
  for (double x : out) EXPECT_NEAR(x, 0.25, 1e-15);
}

TEST(SimplexProperty, MatchesGridOracleInTwoDimensions) {
  Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    const double a = testing::uniform(rng, -1.0, 2.0);
    const std::vector<double> q = {a, 1.0 - a};
    EXPECT_NEAR(nearest_probability(q)[0], grid_oracle(q)[0], 1e-3);
  }
}

TEST(SimplexProperty, IdempotentAndNonExpansive) {
  Rng rng(14);
  for (int k = 0; k < 200; ++k) {
    const size_t n = 2 + uniform_index(rng, 6);
    std::vector<double> a(n), b(n);
    for (size_t i = 0; i < n; ++i) a[i] = testing::uniform(rng, -0.5, 1.0), b[i] = testing::uniform(rng, -0.5, 1.0);
    const auto pa = project_to_simplex(a), pb = project_to_simplex(b);
    EXPECT_NEAR(std::accumulate(pa.begin(), pa.end(), 0.0), 1.0, 1e-12);
    for (double x : pa) EXPECT_GE(x, 0.0);
    const auto ppa = project_to_simplex(pa);
    double d_in = 0, d_out = 0;
    for (size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(ppa[i], pa[i], 1e-12);
      d_in += (a[i] - b[i]) * (a[i] - b[i]);
      d_out += (pa[i] - pb[i]) * (pa[i] - pb[i]);
    }
    EXPECT_LE(d_out, d_in + 1e-12);
  }
}

}  // namespace
}  // namespace qss
