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

#include "qss/stabilizer/pauli.h"

#include <bit>
#include <stdexcept>

namespace qss {
namespace {

int letter_index(char c) {
  switch (c) {
    case 'I': case '_': return 0;
    case 'X': return 1;
    case 'Y': return 2;
    case 'Z': return 3;
    default: throw std::invalid_argument(std::string("invalid Pauli letter '") + c + "'");
  }
}

}  // namespace

PauliString::PauliString(int n_qubits) : n_(n_qubits), phase_(0), x_(0), z_(0) {
  if (n_qubits < 0 || n_qubits > 64) throw std::invalid_argument("Pauli strings hold 0..64 qubits");
}

PauliString PauliString::parse(std::string_view text) {
  int phase = 0;
  size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase = (phase + 1) % 4;
    ++pos;
  }
  PauliString p(static_cast<int>(text.size() - pos));
  for (int q = 1; pos < text.size(); ++pos, ++q) p.set_letter(q, text[pos]);
  p.phase_ = phase;
  return p;
}

PauliString PauliString::single(int n_qubits, int qubit, char letter) {
  PauliString p(n_qubits);
  p.set_letter(qubit, letter);
  return p;
}

void PauliString::check_qubit(int qubit) const {
  if (qubit < 1 || qubit > n_) {
    throw std::out_of_range("qubit " + std::to_string(qubit) + " outside Pauli string of length " +
                            std::to_string(n_));
  }
}

char PauliString::letter(int qubit) const {
  check_qubit(qubit);
  const bool x = (x_ >> (qubit - 1)) & 1, z = (z_ >> (qubit - 1)) & 1;
  return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

PauliString& PauliString::set_letter(int qubit, char letter) {
  check_qubit(qubit);
  const int idx = letter_index(letter);
  const uint64_t bit = uint64_t{1} << (qubit - 1);
  x_ &= ~bit;
  z_ &= ~bit;
  if (idx == 1 || idx == 2) x_ |= bit;
  if (idx == 2 || idx == 3) z_ |= bit;
  return *this;
}

PauliString& PauliString::set_phase(int k) {
  phase_ = ((k % 4) + 4) % 4;
  return *this;
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

std::string PauliString::letters() const {
  std::string s;
  for (int q = 1; q <= n_; ++q) s += letter(q);
  return s;
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[] = {"", "i", "-", "-i"};
  return kPrefix[phase_] + letters();
}

PauliString PauliString::operator*(const PauliString& other) const {
  if (other.n_ != n_) throw std::invalid_argument("Pauli product of different lengths");
  PauliString out(n_);
  int phase = phase_ + other.phase_;
  for (int q = 1; q <= n_; ++q) {
    const int a = letter_index(letter(q)), b = letter_index(other.letter(q));
    if (a != 0 && b != 0 && a != b) {
      // X->Y->Z cyclic order gives +i, anticyclic gives -i.
      phase += ((b - a + 3) % 3 == 1) ? 1 : 3;
    }
  }
  out.x_ = x_ ^ other.x_;
  out.z_ = z_ ^ other.z_;
  out.phase_ = phase % 4;
  return out;
}

PauliString PauliString::adjoint() const {
  PauliString out = *this;
  out.phase_ = (4 - phase_) % 4;
  return out;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (other.n_ != n_) throw std::invalid_argument("commutation of Pauli strings of different lengths");
  return std::popcount((x_ & other.z_) ^ (z_ & other.x_)) % 2 == 0;
}

bool PauliString::equal_up_to_phase(const PauliString& other) const {
  return n_ == other.n_ && x_ == other.x_ && z_ == other.z_;
}

PauliString PauliString::restrict_to(const QubitList& qubits) const {
  PauliString out(static_cast<int>(qubits.size()));
  for (size_t j = 0; j < qubits.size(); ++j) out.set_letter(static_cast<int>(j) + 1, letter(qubits[j]));
  return out;
}

PauliString PauliString::embed(int n_qubits, const QubitList& qubits) const {
  if (static_cast<int>(qubits.size()) != n_) throw std::invalid_argument("embed: qubit list length mismatch");
  PauliString out(n_qubits);
  for (int j = 0; j < n_; ++j) out.set_letter(qubits[j], letter(j + 1));
  out.phase_ = phase_;
  return out;
}

Matrix PauliString::matrix() const {
  static const Complex kI(0.0, 1.0);
  Matrix m = Matrix::Identity(1, 1);
  for (int q = 1; q <= n_; ++q) {
    Matrix p(2, 2);
    switch (letter(q)) {
      case 'I': p << 1, 0, 0, 1; break;
      case 'X': p << 0, 1, 1, 0; break;
      case 'Y': p << 0, -kI, kI, 0; break;
      default: p << 1, 0, 0, -1; break;
    }
    Matrix next(m.rows() * 2, m.cols() * 2);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      for (Eigen::Index j = 0; j < m.cols(); ++j) next.block(2 * i, 2 * j, 2, 2) = m(i, j) * p;
    }
    m = std::move(next);
  }
  static const Complex kPhases[] = {1.0, kI, -1.0, -kI};
  return kPhases[phase_] * m;
}

}  // namespace qss
