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

#include <functional>
#include <vector>

#include "qss/qcore/state.h"

namespace qss {

/// Completely positive, trace-preserving map given by Kraus operators of
/// shape (2^n_out) x (2^n_in).
class Channel {
 public:
  /// Validates shapes and sum K^dagger K = I within `tol`.
  static Channel make(std::vector<Matrix> kraus, double tol = 1e-10);
  static Channel identity(int n_qubits);

  int n_in() const { return n_in_; }
  int n_out() const { return n_out_; }
  uint64_t dim_in() const { return uint64_t{1} << n_in_; }
  uint64_t dim_out() const { return uint64_t{1} << n_out_; }
  const std::vector<Matrix>& kraus() const { return kraus_; }

  /// sum_k K op K^dagger.
  Matrix apply(const Matrix& op) const;
  /// J = sum_ij |i><j| (x) N(|i><j|), input factor first.
  Matrix choi() const;

 private:
  Channel(int n_in, int n_out, std::vector<Matrix> kraus) : n_in_(n_in), n_out_(n_out), kraus_(std::move(kraus)) {}
  int n_in_;
  int n_out_;
  std::vector<Matrix> kraus_;
};

/// K0 = |0><0|, K1 = |0><1|.
Channel erasure_channel();
/// rho -> (1-p) rho + p I/2 with Kraus sqrt(1-3p/4) I, sqrt(p/4) X, Y, Z.
Channel depolarizing(double p);
/// n-qubit depolarizing rho -> (1-p) rho + p I/2^n tr(rho).
Channel depolarizing(double p, int n_qubits);

/// Applies the channel to `targets` (first target = most significant
/// factor). The channel must map qubits to the same number of qubits.
DensityMatrix apply_channel(const DensityMatrix& state, const Channel& channel, const QubitList& targets);

/// J = sum_ij |i><j| (x) map(|i><j|) for a linear map on 2^n_in dimensions.
Matrix choi_of_map(const std::function<Matrix(const Matrix&)>& map, int n_in);

/// Kraus set from the eigendecomposition of a Choi matrix. Throws
/// std::domain_error if an eigenvalue is below -tol (not completely positive).
Channel channel_from_choi(const Matrix& choi, int n_in, int n_out, double tol = 1e-9);

}  // namespace qss
