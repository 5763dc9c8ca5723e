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

#include "qss/metrics/swap_test.h"

#include <algorithm>
#include <stdexcept>

#include "qss/qcore/composite.h"
#include "qss/qcore/simulator.h"

namespace qss {

Circuit swap_test_circuit(int k) {
  Circuit c(2 * k + 1, 1);
  c.h(1);
  for (int j = 1; j <= k; ++j) append_fredkin(c, 1, 1 + j, 1 + k + j);
  c.h(1);
  c.measure(1, 0);
  return c;
}

int sample_zero_count(double p0, int shots, Rng& rng) {
  if (shots < 1) throw std::invalid_argument("shots must be at least 1");
  int zeros = 0;
  for (int s = 0; s < shots; ++s) zeros += uniform01(rng) < p0 ? 1 : 0;
  return zeros;
}

SwapTestResult swap_test(const DensityMatrix& rho, const StateVector& phi, std::optional<int> shots, Rng& rng) {
  if (rho.n_qubits() != phi.n_qubits()) throw std::invalid_argument("SWAP test of states with different dimensions");
  const int k = rho.n_qubits();
  Matrix anc = Matrix::Zero(2, 2);
  anc(0, 0) = 1.0;
  const Matrix input = kron(kron(anc, rho.matrix()), phi.amplitudes() * phi.amplitudes().adjoint());
  const Matrix out = average_circuit(input, 2 * k + 1, swap_test_circuit(k));
  const Matrix ancilla = partial_trace(out, 2 * k + 1, {1});
  SwapTestResult r;
  r.exact_p0 = std::clamp(ancilla(0, 0).real(), 0.0, 1.0);
  if (shots) {
    r.shots = *shots;
    r.sampled_rate = static_cast<double>(sample_zero_count(r.exact_p0, *shots, rng)) / *shots;
  }
  return r;
}

SwapTestResult swap_test(const StateVector& psi, const StateVector& phi, std::optional<int> shots, Rng& rng) {
  return swap_test(DensityMatrix::from_pure(psi), phi, shots, rng);
}

}  // namespace qss
