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

#include "qss/qcore/state.h"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qss {

int qubits_for_dim(uint64_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
  }
  int n = 0;
  while ((uint64_t{1} << n) < dim) ++n;
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("qubit count " + std::to_string(n) + " outside [1, " +
                                std::to_string(kMaxQubits) + "]");
  }
  return n;
}

StateVector StateVector::zero(int n_qubits) { return basis(n_qubits, 0); }

StateVector StateVector::basis(int n_qubits, uint64_t index) {
  qubits_for_dim(uint64_t{1} << n_qubits);
  const uint64_t dim = uint64_t{1} << n_qubits;
  if (index >= dim) throw std::out_of_range("basis index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return StateVector(n_qubits, std::move(v));
}

StateVector StateVector::from_bitstring(const std::string& bits) {
  return basis(static_cast<int>(bits.size()), parse_bitstring(bits));
}

StateVector StateVector::from_amplitudes(Vector amplitudes) {
  const int n = qubits_for_dim(static_cast<uint64_t>(amplitudes.size()));
  const double norm = amplitudes.norm();
  if (std::abs(norm - 1.0) > 1e-12) {
    throw std::invalid_argument("state vector norm deviates from 1 by " +
                                std::to_string(std::abs(norm - 1.0)));
  }
  return StateVector(n, std::move(amplitudes));
}

StateVector StateVector::from_raw(int n_qubits, Vector amplitudes) {
  return StateVector(n_qubits, std::move(amplitudes));
}

StateVector StateVector::tensor(const StateVector& other) const {
  const int n = n_qubits_ + other.n_qubits_;
  if (n > kMaxQubits) throw std::invalid_argument("tensor product exceeds qubit limit");
  Vector v(amps_.size() * other.amps_.size());
  for (Eigen::Index i = 0; i < amps_.size(); ++i) {
    v.segment(i * other.amps_.size(), other.amps_.size()) = amps_(i) * other.amps_;
  }
  return StateVector(n, std::move(v));
}

DensityMatrix DensityMatrix::from_pure(const StateVector& psi) {
  return DensityMatrix(psi.n_qubits(), psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::zero(int n_qubits) { return from_pure(StateVector::zero(n_qubits)); }

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  qubits_for_dim(uint64_t{1} << n_qubits);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  return DensityMatrix(n_qubits, Matrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::from_matrix(Matrix rho, double tol) {
  if (rho.rows() != rho.cols()) throw std::invalid_argument("density matrix must be square");
  const int n = qubits_for_dim(static_cast<uint64_t>(rho.rows()));
  DensityMatrix dm(n, std::move(rho));
  dm.validate(tol);
  return dm;
}

DensityMatrix DensityMatrix::from_raw(int n_qubits, Matrix rho) {
  return DensityMatrix(n_qubits, std::move(rho));
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

DensityMatrix DensityMatrix::tensor(const DensityMatrix& other) const {
  const int n = n_qubits_ + other.n_qubits_;
  if (n > kMaxQubits) throw std::invalid_argument("tensor product exceeds qubit limit");
  return DensityMatrix(n, kron(rho_, other.rho_));
}

void DensityMatrix::validate(double tol) const {
  const double herm = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
  if (herm > tol) {
    throw std::domain_error("density matrix is not Hermitian (deviation " + std::to_string(herm) +
                            ")");
  }
  const double tr = rho_.trace().real();
  if (std::abs(tr - 1.0) > tol) {
    throw std::domain_error("density matrix trace is " + std::to_string(tr));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho_, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -1e-10) {
    throw std::domain_error("density matrix has eigenvalue " +
                            std::to_string(es.eigenvalues().minCoeff()));
  }
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

double trace_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("trace distance of mismatched dimensions");
  }
  const Matrix diff = a - b;
  const Matrix herm = (diff + diff.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(herm, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return trace_distance(a.matrix(), b.matrix());
}

std::string bitstring(uint64_t index, int n_qubits) {
  std::string s(n_qubits, '0');
  for (int q = 1; q <= n_qubits; ++q) {
    if ((index >> bit_position(n_qubits, q)) & 1) s[q - 1] = '1';
  }
  return s;
}

uint64_t parse_bitstring(const std::string& bits) {
  uint64_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("invalid bitstring '" + bits + "'");
    index = (index << 1) | static_cast<uint64_t>(c == '1');
  }
  return index;
}

}  // namespace qss
