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

#include "qss/metrics/entanglement_fidelity.h"

#include <cmath>
#include <stdexcept>

namespace qss {
namespace {

void check(const Channel& channel, int d) {
  const bool ok = (d == 2 && channel.n_in() == 1) || (d == 3 && channel.n_in() == 2);
  if (!ok || channel.n_out() != channel.n_in()) {
    throw std::invalid_argument("channel on " + std::to_string(channel.n_in()) + " qubit(s) does not carry d = " +
                                std::to_string(d));
  }
}

}  // namespace

StateVector phi_plus(int d, int n_qubits) {
  const Eigen::Index local = Eigen::Index{1} << n_qubits;
  if (d < 1 || d > local) throw std::invalid_argument("level count exceeds register dimension");
  Vector v = Vector::Zero(local * local);
  for (Eigen::Index i = 0; i < d; ++i) v(i * local + i) = 1.0 / std::sqrt(static_cast<double>(d));
  return StateVector::from_amplitudes(std::move(v));
}

DensityMatrix phi_plus_output(const Channel& channel, int d) {
  check(channel, d);
  const int n = channel.n_in();
  const Eigen::Index local = Eigen::Index{1} << n;
  Matrix out = Matrix::Zero(local * local, local * local);
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) {
      Matrix eij = Matrix::Zero(local, local);
      eij(i, j) = 1.0;
      out.block(i * local, j * local, local, local) = channel.apply(eij) / static_cast<double>(d);
    }
  }
  return DensityMatrix::from_raw(2 * n, std::move(out));
}

double entanglement_fidelity(const Channel& channel, int d) {
  check(channel, d);
  double f = 0.0;
  for (const Matrix& k : channel.kraus()) {
    Complex tr = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) tr += k(i, i);
    f += std::norm(tr);
  }
  return f / static_cast<double>(d * d);
}

double leakage(const Channel& channel, int d) {
  const DensityMatrix out = phi_plus_output(channel, d);
  const Eigen::Index local = Eigen::Index{1} << channel.n_in();
  double pop = 0.0;
  for (Eigen::Index r = 0; r < out.matrix().rows(); ++r) {
    if (r % local >= d) pop += out.matrix()(r, r).real();
  }
  return pop;
}

}  // namespace qss
