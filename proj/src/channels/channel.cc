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

#include "qss/channels/channel.h"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "qss/qcore/kernels.h"
#include "qss/stabilizer/pauli.h"

namespace qss {

Channel Channel::make(std::vector<Matrix> kraus, double tol) {
  if (kraus.empty()) throw std::invalid_argument("a channel needs at least one Kraus operator");
  const Eigen::Index rows = kraus[0].rows(), cols = kraus[0].cols();
  const int n_out = qubits_for_dim(static_cast<uint64_t>(rows));
  const int n_in = qubits_for_dim(static_cast<uint64_t>(cols));
  Matrix sum = Matrix::Zero(cols, cols);
  for (const Matrix& k : kraus) {
    if (k.rows() != rows || k.cols() != cols) throw std::invalid_argument("Kraus operators differ in shape");
    sum += k.adjoint() * k;
  }
  const double dev = (sum - Matrix::Identity(cols, cols)).cwiseAbs().maxCoeff();
  if (dev > tol) throw std::domain_error("Kraus operators are not trace preserving (deviation " + std::to_string(dev) + ")");
  return Channel(n_in, n_out, std::move(kraus));
}

Channel Channel::identity(int n_qubits) {
  const Eigen::Index d = Eigen::Index{1} << n_qubits;
  return make({Matrix::Identity(d, d)});
}

Matrix Channel::apply(const Matrix& op) const {
  if (static_cast<uint64_t>(op.rows()) != dim_in() || op.rows() != op.cols()) {
    throw std::invalid_argument("operator dimension does not match the channel input");
  }
  const Eigen::Index d = static_cast<Eigen::Index>(dim_out());
  Matrix out = Matrix::Zero(d, d);
  for (const Matrix& k : kraus_) out += k * op * k.adjoint();
  return out;
}

Matrix Channel::choi() const {
  return choi_of_map([this](const Matrix& m) { return apply(m); }, n_in_);
}

Channel erasure_channel() {
  Matrix k0 = Matrix::Zero(2, 2), k1 = Matrix::Zero(2, 2);
  k0(0, 0) = 1.0;
  k1(0, 1) = 1.0;
  return Channel::make({k0, k1});
}

Channel depolarizing(double p) { return depolarizing(p, 1); }

Channel depolarizing(double p, int n_qubits) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("depolarizing strength must lie in [0, 1]");
  if (n_qubits < 1 || n_qubits > 4) throw std::invalid_argument("depolarizing channel supports 1..4 qubits");
  const uint64_t count = uint64_t{1} << (2 * n_qubits);
  std::vector<Matrix> kraus;
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  for (uint64_t code = 0; code < count; ++code) {
    PauliString p_str(n_qubits);
    for (int q = 1; q <= n_qubits; ++q) p_str.set_letter(q, kLetters[(code >> (2 * (n_qubits - q))) & 3]);
    const double w = code == 0 ? 1.0 - p + p / static_cast<double>(count) : p / static_cast<double>(count);
    if (w == 0.0 && code != 0) continue;
    kraus.push_back(std::sqrt(w) * p_str.matrix());
  }
  return Channel::make(std::move(kraus));
}

DensityMatrix apply_channel(const DensityMatrix& state, const Channel& channel, const QubitList& targets) {
  if (channel.n_in() != channel.n_out()) throw std::invalid_argument("channel must preserve the qubit count");
  if (static_cast<int>(targets.size()) != channel.n_in()) {
    throw std::invalid_argument("channel acts on " + std::to_string(channel.n_in()) + " qubit(s) but " +
                                std::to_string(targets.size()) + " target(s) given");
  }
  for (int q : targets) {
    if (q < 1 || q > state.n_qubits()) throw std::out_of_range("channel target out of range");
  }
  Matrix rho = state.matrix();
  kernels::apply_kraus(rho, state.n_qubits(), targets, channel.kraus());
  return DensityMatrix::from_raw(state.n_qubits(), std::move(rho));
}

Matrix choi_of_map(const std::function<Matrix(const Matrix&)>& map, int n_in) {
  const Eigen::Index din = Eigen::Index{1} << n_in;
  Matrix choi;
  for (Eigen::Index i = 0; i < din; ++i) {
    for (Eigen::Index j = 0; j < din; ++j) {
      Matrix eij = Matrix::Zero(din, din);
      eij(i, j) = 1.0;
      const Matrix out = map(eij);
      if (choi.size() == 0) choi = Matrix::Zero(din * out.rows(), din * out.cols());
      choi.block(i * out.rows(), j * out.cols(), out.rows(), out.cols()) = out;
    }
  }
  return choi;
}

Channel channel_from_choi(const Matrix& choi, int n_in, int n_out, double tol) {
  const Eigen::Index din = Eigen::Index{1} << n_in, dout = Eigen::Index{1} << n_out;
  if (choi.rows() != din * dout || choi.cols() != din * dout) throw std::invalid_argument("Choi matrix has the wrong size");
  Eigen::SelfAdjointEigenSolver<Matrix> es((choi + choi.adjoint()) / 2.0);
  const double scale = std::max(1.0, es.eigenvalues().cwiseAbs().maxCoeff());
  std::vector<Matrix> kraus;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double lambda = es.eigenvalues()(k);
    if (lambda < -tol * scale) {
      throw std::domain_error("Choi matrix has eigenvalue " + std::to_string(lambda) + "; map is not completely positive");
    }
    if (lambda <= 1e-14 * scale) continue;
    Matrix kop(dout, din);
    for (Eigen::Index i = 0; i < din; ++i) {
      for (Eigen::Index o = 0; o < dout; ++o) kop(o, i) = std::sqrt(lambda) * es.eigenvectors()(i * dout + o, k);
    }
    kraus.push_back(std::move(kop));
  }
  return Channel::make(std::move(kraus));
}

}  // namespace qss
