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

#include "qss/qcore/simulator.h"
#include "qss/stabilizer/clifford.h"
#include "test_support.h"

namespace qss {
namespace {

TEST(Pauli, ParseAndPrint) {
  EXPECT_EQ(PauliString::parse("-XZZXI").str(), "-XZZXI");
  EXPECT_EQ(PauliString::parse("+iY_Z").str(), "iYIZ");
  EXPECT_EQ(PauliString::parse("-iX").phase(), 3);
  EXPECT_EQ(PauliString::parse("IXYZ").weight(), 3);
  EXPECT_THROW(PauliString::parse("XQ"), std::invalid_argument);
}

TEST(Pauli, ProductPhases) {
  EXPECT_EQ((PauliString::parse("X") * PauliString::parse("Y")).str(), "iZ");
  EXPECT_EQ((PauliString::parse("Y") * PauliString::parse("X")).str(), "-iZ");
  EXPECT_EQ((PauliString::parse("XZ") * PauliString::parse("ZX")).str(), "YY");
  EXPECT_TRUE((PauliString::parse("-XY") * PauliString::parse("-XY")).is_identity());
}

TEST(Pauli, Commutation) {
  EXPECT_FALSE(PauliString::parse("XI").commutes_with(PauliString::parse("ZI")));
  EXPECT_TRUE(PauliString::parse("XX").commutes_with(PauliString::parse("ZZ")));
}

TEST(Pauli, RestrictAndEmbed) {
  const PauliString p = PauliString::parse("XYZI");
  EXPECT_EQ(p.restrict_to({2, 3}).letters(), "YZ");
  EXPECT_EQ(PauliString::parse("YZ").embed(4, {2, 3}).letters(), "IYZI");
}

TEST(PauliProperty, ProductMatchesMatrices) {
  Rng rng(1);
  for (int k = 0; k < 200; ++k) {
    const PauliString a = testing::random_pauli(3, rng), b = testing::random_pauli(3, rng);
    EXPECT_LT(testing::max_abs((a * b).matrix() - a.matrix() * b.matrix()), 1e-12);
    EXPECT_LT(testing::max_abs(a.adjoint().matrix() - a.matrix().adjoint()), 1e-12);
    const bool commute = testing::max_abs(a.matrix() * b.matrix() - b.matrix() * a.matrix()) < 1e-12;
    EXPECT_EQ(a.commutes_with(b), commute);
  }
}

TEST(Clifford, CnotTurnsXXIntoXI) {
  Circuit c(2);
  c.cx(1, 2);
  EXPECT_EQ(conjugate_pauli(c, PauliString::parse("XX")).str(), "XI");
}

TEST(Clifford, HadamardExchangesXAndZ) {
  Circuit c(1);
  c.h(1);
  EXPECT_EQ(conjugate_pauli(c, PauliString::parse("X")).str(), "Z");
  EXPECT_EQ(conjugate_pauli(c, PauliString::parse("Z")).str(), "X");
}

TEST(Clifford, CzRules) {
  Circuit c(2);
  c.cz(1, 2);
  EXPECT_EQ(conjugate_pauli(c, PauliString::parse("XI")).str(), "XZ");
  EXPECT_EQ(conjugate_pauli(c, PauliString::parse("ZI")).str(), "ZI");
}

TEST(Clifford, RejectsNonClifford) {
  Circuit c(1);
  c.rz(1, 0.3);
  EXPECT_THROW(conjugate_pauli(c, PauliString::parse("X")), std::invalid_argument);
  Circuit m(1, 1);
  m.measure(1, 0);
  EXPECT_THROW(conjugate_pauli(m, PauliString::parse("X")), std::invalid_argument);
}

TEST(CliffordProperty, MatchesMatrixConjugation) {
  Rng rng(2);
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + static_cast<int>(uniform_index(rng, 3));
    const Circuit c = testing::random_circuit(n, 8, rng, true);
    const PauliString p = testing::random_pauli(n, rng);
    const Matrix u = circuit_unitary(c);
    EXPECT_LT(testing::max_abs(conjugate_pauli(c, p).matrix() - u * p.matrix() * u.adjoint()), 1e-12);
  }
}

TEST(CliffordProperty, CompositionIsHomomorphic) {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const Circuit c1 = testing::random_circuit(4, 1 + static_cast<int>(uniform_index(rng, 10)), rng, true);
    const Circuit c2 = testing::random_circuit(4, 1 + static_cast<int>(uniform_index(rng, 10)), rng, true);
    Circuit both(4);
    both.append(c2).append(c1);
    const PauliString p = testing::random_pauli(4, rng);
    EXPECT_EQ(conjugate_pauli(both, p), conjugate_pauli(c1, conjugate_pauli(c2, p)));
  }
}

}  // namespace
}  // namespace qss
