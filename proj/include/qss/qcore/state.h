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

#include <cstdint>
#include <string>

#include "qss/qcore/types.h"

namespace qss {

/// Pure state on n qubits: 2^n amplitudes, unit norm.
class StateVector {
 public:
  static StateVector zero(int n_qubits);
  static StateVector basis(int n_qubits, uint64_t index);
  /// Bitstring with qubit 1 first, e.g. "0110".
  static StateVector from_bitstring(const std::string& bits);
  /// Validates power-of-two length and |norm - 1| < 1e-12.
  static StateVector from_amplitudes(Vector amplitudes);
  /// No validation; for kernels that preserve the invariants themselves.
  static StateVector from_raw(int n_qubits, Vector amplitudes);

  int n_qubits() const { return n_qubits_; }
  uint64_t dim() const { return static_cast<uint64_t>(amps_.size()); }
  const Vector& amplitudes() const { return amps_; }
  Complex operator[](uint64_t index) const { return amps_(static_cast<Eigen::Index>(index)); }
  double norm() const { return amps_.norm(); }

  /// this ⊗ other; this state's qubits come first.
  StateVector tensor(const StateVector& other) const;

 private:
  StateVector(int n, Vector amps) : n_qubits_(n), amps_(std::move(amps)) {}
  int n_qubits_;
  Vector amps_;
};

/// Mixed state on n qubits: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  static DensityMatrix from_pure(const StateVector& psi);
  static DensityMatrix zero(int n_qubits);
  static DensityMatrix maximally_mixed(int n_qubits);
  /// Validates Hermiticity and trace within `tol` and eigenvalues >= -1e-10.
  static DensityMatrix from_matrix(Matrix rho, double tol = 1e-12);
  static DensityMatrix from_raw(int n_qubits, Matrix rho);

  int n_qubits() const { return n_qubits_; }
  uint64_t dim() const { return static_cast<uint64_t>(rho_.rows()); }
  const Matrix& matrix() const { return rho_; }
  Complex operator()(uint64_t r, uint64_t c) const {
    return rho_(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  }
  double trace() const { return rho_.trace().real(); }
  double purity() const;

  DensityMatrix tensor(const DensityMatrix& other) const;

  /// Throws std::domain_error describing the first violated invariant.
  void validate(double tol) const;

 private:
  DensityMatrix(int n, Matrix rho) : n_qubits_(n), rho_(std::move(rho)) {}
  int n_qubits_;
  Matrix rho_;
};

/// Number of qubits for a power-of-two dimension; throws otherwise.
int qubits_for_dim(uint64_t dim);

/// Kronecker product with `a` as the more significant factor.
Matrix kron(const Matrix& a, const Matrix& b);

/// Half the trace norm of (a - b).
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
double trace_distance(const Matrix& a, const Matrix& b);

/// Bitstring of `index` over n qubits, qubit 1 first.
std::string bitstring(uint64_t index, int n_qubits);
uint64_t parse_bitstring(const std::string& bits);

}  // namespace qss
