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

#include "qss/qcore/kernels.h"

#include <algorithm>

namespace qss::kernels {

namespace {

void apply_one(Complex* data, int total_bits, int p, const Matrix& m) {
  const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  const uint64_t stride = uint64_t{1} << p, size = uint64_t{1} << total_bits;
  for (uint64_t block = 0; block < size; block += 2 * stride) {
    for (uint64_t j = block; j < block + stride; ++j) {
      const Complex a = data[j], b = data[j + stride];
      data[j] = m00 * a + m01 * b;
      data[j + stride] = m10 * a + m11 * b;
    }
  }
}

void apply_two(Complex* data, int total_bits, int p_hi, int p_lo, const Matrix& m) {
  // Local index l = 2 * bit(p_hi) + bit(p_lo), matching the gate's target order.
  Complex u[4][4];
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) u[r][c] = m(r, c);
  }
  const uint64_t s_hi = uint64_t{1} << p_hi, s_lo = uint64_t{1} << p_lo;
  const int lo = std::min(p_hi, p_lo), hi = std::max(p_hi, p_lo);
  const uint64_t outer = uint64_t{1} << (total_bits - 2);
  for (uint64_t i = 0; i < outer; ++i) {
    uint64_t base = ((i >> lo) << (lo + 1)) | (i & ((uint64_t{1} << lo) - 1));
    base = ((base >> hi) << (hi + 1)) | (base & ((uint64_t{1} << hi) - 1));
    const uint64_t idx[4] = {base, base | s_lo, base | s_hi, base | s_hi | s_lo};
    const Complex in[4] = {data[idx[0]], data[idx[1]], data[idx[2]], data[idx[3]]};
    for (int r = 0; r < 4; ++r) data[idx[r]] = u[r][0] * in[0] + u[r][1] * in[1] + u[r][2] * in[2] + u[r][3] * in[3];
  }
}

}  // namespace

void apply_matrix(Complex* data, int total_bits, const std::vector<int>& positions, const Matrix& m) {
  if (positions.size() == 1) return apply_one(data, total_bits, positions[0], m);
  if (positions.size() == 2) return apply_two(data, total_bits, positions[0], positions[1], m);
  const int k = static_cast<int>(positions.size());
  const uint64_t local = uint64_t{1} << k;
  std::vector<uint64_t> offsets(local, 0);
  for (uint64_t l = 0; l < local; ++l) {
    for (int j = 0; j < k; ++j) {
      if ((l >> (k - 1 - j)) & 1) offsets[l] |= uint64_t{1} << positions[j];
    }
  }
  std::vector<int> sorted(positions);
  std::sort(sorted.begin(), sorted.end());
  std::vector<Complex> in(local), out(local);
  const uint64_t outer = uint64_t{1} << (total_bits - k);
  for (uint64_t i = 0; i < outer; ++i) {
    uint64_t base = i;
    for (int p : sorted) {
      const uint64_t low = base & ((uint64_t{1} << p) - 1);
      base = ((base >> p) << (p + 1)) | low;
    }
    for (uint64_t l = 0; l < local; ++l) in[l] = data[base | offsets[l]];
    for (uint64_t r = 0; r < local; ++r) {
      Complex acc = 0.0;
      for (uint64_t c = 0; c < local; ++c) acc += m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
      out[r] = acc;
    }
    for (uint64_t l = 0; l < local; ++l) data[base | offsets[l]] = out[l];
  }
}

void conjugate(Matrix& op, int n_qubits, const QubitList& qubits, const Matrix& u) {
  std::vector<int> rows, cols;
  for (int q : qubits) {
    rows.push_back(bit_position(n_qubits, q));
    cols.push_back(bit_position(n_qubits, q) + n_qubits);
  }
  apply_matrix(op.data(), 2 * n_qubits, rows, u);
  apply_matrix(op.data(), 2 * n_qubits, cols, u.conjugate());
}

void apply_kraus(Matrix& op, int n_qubits, const QubitList& qubits, const std::vector<Matrix>& kraus) {
  Matrix acc = Matrix::Zero(op.rows(), op.cols());
  for (const Matrix& k : kraus) {
    Matrix term = op;
    conjugate(term, n_qubits, qubits, k);
    acc += term;
  }
  op = std::move(acc);
}

void project(Matrix& op, int n_qubits, int qubit, int bit) {
  const int pos = bit_position(n_qubits, qubit);
  for (Eigen::Index c = 0; c < op.cols(); ++c) {
    const bool col_ok = ((c >> pos) & 1) == bit;
    for (Eigen::Index r = 0; r < op.rows(); ++r) {
      if (!col_ok || ((r >> pos) & 1) != bit) op(r, c) = 0.0;
    }
  }
}

void reset(Matrix& op, int n_qubits, int qubit) {
  const Eigen::Index mask = Eigen::Index{1} << bit_position(n_qubits, qubit);
  for (Eigen::Index c = 0; c < op.cols(); ++c) {
    for (Eigen::Index r = 0; r < op.rows(); ++r) {
      if ((r & mask) || (c & mask)) continue;
      op(r, c) += op(r | mask, c | mask);
    }
  }
  for (Eigen::Index c = 0; c < op.cols(); ++c) {
    for (Eigen::Index r = 0; r < op.rows(); ++r) {
      if ((r & mask) || (c & mask)) op(r, c) = 0.0;
    }
  }
}

}  // namespace qss::kernels
