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

#include "qss/qcore/simulator.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "qss/qcore/kernels.h"

namespace qss {
namespace {

void check_gate(int n_qubits, const GateSpec& gate) {
  if (static_cast<int>(gate.params.size()) != gate_param_count(gate.kind)) {
    throw std::invalid_argument("parameter arity mismatch for " + to_string(gate));
  }
  if (static_cast<int>(gate.targets.size()) != gate_qubit_count(gate.kind)) {
    throw std::invalid_argument("target arity mismatch for " + to_string(gate));
  }
  for (int q : gate.targets) {
    if (q < 1 || q > n_qubits) {
      throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " +
                              std::to_string(n_qubits) + "-qubit state");
    }
  }
}

void check_circuit(int n_qubits, const Circuit& circuit) {
  if (circuit.n_qubits() != n_qubits) {
    throw std::invalid_argument("circuit acts on " + std::to_string(circuit.n_qubits()) +
                                " qubits but state has " + std::to_string(n_qubits));
  }
}

int register_value(const std::vector<int>& clbits, const ConditionalOp& op) {
  int v = 0;
  for (int c : op.clbits) v = (v << 1) | clbits[c];
  return v;
}

double prob_one(const Matrix& rho, int n_qubits, int qubit) {
  const Eigen::Index mask = Eigen::Index{1} << bit_position(n_qubits, qubit);
  double p = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i) {
    if (i & mask) p += rho(i, i).real();
  }
  return p;
}

// Eigenvalues at rounding level are zeroed before square roots amplify them.
constexpr double kEigenFloor = 1e-13;

Eigen::VectorXd floored_roots(const Eigen::VectorXd& ev) {
  const double cut = kEigenFloor * std::max(1.0, ev.cwiseAbs().maxCoeff());
  return ev.unaryExpr([cut](double x) { return x > cut ? std::sqrt(x) : 0.0; });
}

Matrix sqrt_psd(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((m + m.adjoint()) / 2.0);
  const Eigen::VectorXd ev = floored_roots(es.eigenvalues());
  return es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

void apply_gate_inplace(Vector& amps, int n_qubits, const GateSpec& gate) {
  check_gate(n_qubits, gate);
  std::vector<int> pos;
  for (int q : gate.targets) pos.push_back(bit_position(n_qubits, q));
  kernels::apply_matrix(amps.data(), n_qubits, pos, gate_matrix(gate));
}

void apply_gate_inplace(Matrix& op, int n_qubits, const GateSpec& gate) {
  check_gate(n_qubits, gate);
  kernels::conjugate(op, n_qubits, gate.targets, gate_matrix(gate));
}

StateVector apply_gate(const StateVector& state, const GateSpec& gate) {
  Vector amps = state.amplitudes();
  apply_gate_inplace(amps, state.n_qubits(), gate);
  return StateVector::from_raw(state.n_qubits(), std::move(amps));
}

DensityMatrix apply_gate(const DensityMatrix& state, const GateSpec& gate) {
  Matrix rho = state.matrix();
  apply_gate_inplace(rho, state.n_qubits(), gate);
  return DensityMatrix::from_raw(state.n_qubits(), std::move(rho));
}

CircuitRun<StateVector> apply_circuit(const StateVector& state, const Circuit& circuit, Rng& rng) {
  const int n = state.n_qubits();
  check_circuit(n, circuit);
  Vector amps = state.amplitudes();
  std::vector<int> clbits(circuit.n_clbits(), 0);
  auto collapse = [&](int qubit) {
    const uint64_t mask = uint64_t{1} << bit_position(n, qubit);
    double p1 = 0.0;
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
      if (static_cast<uint64_t>(i) & mask) p1 += std::norm(amps(i));
    }
    const int outcome = uniform01(rng) < p1 ? 1 : 0;
    const double keep = outcome ? p1 : 1.0 - p1;
    const double scale = 1.0 / std::sqrt(keep);
    for (Eigen::Index i = 0; i < amps.size(); ++i) {
      const int bit = (static_cast<uint64_t>(i) & mask) ? 1 : 0;
      amps(i) = bit == outcome ? amps(i) * scale : Complex(0.0);
    }
    return outcome;
  };
  for (const Operation& op : circuit.ops()) {
    if (const auto* g = std::get_if<GateSpec>(&op)) {
      apply_gate_inplace(amps, n, *g);
    } else if (const auto* m = std::get_if<MeasureOp>(&op)) {
      clbits[m->clbit] = collapse(m->qubit);
    } else if (const auto* r = std::get_if<ResetOp>(&op)) {
      if (collapse(r->qubit) == 1) apply_gate_inplace(amps, n, GateSpec::make(GateKind::kX, {r->qubit}));
    } else if (const auto* c = std::get_if<ConditionalOp>(&op)) {
      if (register_value(clbits, *c) == c->value) apply_gate_inplace(amps, n, c->gate);
    }
  }
  return {StateVector::from_raw(n, std::move(amps)), std::move(clbits)};
}

CircuitRun<DensityMatrix> apply_circuit(const DensityMatrix& state, const Circuit& circuit, Rng& rng,
                                        const GateHook& hook) {
  const int n = state.n_qubits();
  check_circuit(n, circuit);
  Matrix rho = state.matrix();
  std::vector<int> clbits(circuit.n_clbits(), 0);
  auto gate = [&](const GateSpec& g) {
    apply_gate_inplace(rho, n, g);
    if (hook) hook(rho, n, g);
  };
  for (const Operation& op : circuit.ops()) {
    if (const auto* g = std::get_if<GateSpec>(&op)) {
      gate(*g);
    } else if (const auto* m = std::get_if<MeasureOp>(&op)) {
      const double p1 = std::clamp(prob_one(rho, n, m->qubit), 0.0, 1.0);
      const int outcome = uniform01(rng) < p1 ? 1 : 0;
      kernels::project(rho, n, m->qubit, outcome);
      rho /= outcome ? p1 : 1.0 - p1;
      clbits[m->clbit] = outcome;
    } else if (const auto* r = std::get_if<ResetOp>(&op)) {
      kernels::reset(rho, n, r->qubit);
    } else if (const auto* c = std::get_if<ConditionalOp>(&op)) {
      if (register_value(clbits, *c) == c->value) gate(c->gate);
    }
  }
  return {DensityMatrix::from_raw(n, std::move(rho)), std::move(clbits)};
}

namespace {

bool is_zero(const Matrix& m) {
  const Complex* d = m.data();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    if (d[i] != Complex(0.0, 0.0)) return false;
  }
  return true;
}

}  // namespace

Matrix average_circuit(const Matrix& op, int n_qubits, const Circuit& circuit, const GateHook& hook) {
  check_circuit(n_qubits, circuit);
  struct Branch {
    Matrix op;
    std::vector<int> clbits;
  };
  // A measurement whose clbit no later conditional reads only dephases.
  const auto& ops = circuit.ops();
  std::vector<bool> read_later(ops.size(), false);
  {
    std::vector<bool> pending(circuit.n_clbits(), false);
    for (size_t i = ops.size(); i-- > 0;) {
      if (const auto* c = std::get_if<ConditionalOp>(&ops[i])) {
        for (int b : c->clbits) pending[b] = true;
      } else if (const auto* m = std::get_if<MeasureOp>(&ops[i])) {
        read_later[i] = pending[m->clbit];
        pending[m->clbit] = false;
      }
    }
  }
  std::vector<Branch> branches;
  branches.push_back({op, std::vector<int>(circuit.n_clbits(), 0)});
  for (size_t i = 0; i < ops.size(); ++i) {
    const Operation& o = ops[i];
    if (const auto* m = std::get_if<MeasureOp>(&o); m && !read_later[i]) {
      const Eigen::Index mask = Eigen::Index{1} << bit_position(n_qubits, m->qubit);
      for (Branch& b : branches) {
        for (Eigen::Index c = 0; c < b.op.cols(); ++c) {
          for (Eigen::Index r = 0; r < b.op.rows(); ++r) {
            if ((r & mask) != (c & mask)) b.op(r, c) = 0.0;
          }
        }
      }
      continue;
    }
    if (const auto* g = std::get_if<GateSpec>(&o)) {
      for (Branch& b : branches) {
        apply_gate_inplace(b.op, n_qubits, *g);
        if (hook) hook(b.op, n_qubits, *g);
      }
    } else if (const auto* m = std::get_if<MeasureOp>(&o)) {
      std::vector<Branch> next;
      for (Branch& b : branches) {
        for (int bit = 0; bit < 2; ++bit) {
          Branch nb{b.op, b.clbits};
          kernels::project(nb.op, n_qubits, m->qubit, bit);
          if (is_zero(nb.op)) continue;
          nb.clbits[m->clbit] = bit;
          next.push_back(std::move(nb));
        }
      }
      branches = std::move(next);
    } else if (const auto* r = std::get_if<ResetOp>(&o)) {
      for (Branch& b : branches) kernels::reset(b.op, n_qubits, r->qubit);
    } else if (const auto* c = std::get_if<ConditionalOp>(&o)) {
      for (Branch& b : branches) {
        if (register_value(b.clbits, *c) != c->value) continue;
        apply_gate_inplace(b.op, n_qubits, c->gate);
        if (hook) hook(b.op, n_qubits, c->gate);
      }
    }
  }
  Matrix total = Matrix::Zero(op.rows(), op.cols());
  for (const Branch& b : branches) total += b.op;
  return total;
}

std::vector<double> probabilities(const StateVector& state) {
  std::vector<double> p(state.dim());
  for (uint64_t i = 0; i < state.dim(); ++i) p[i] = std::norm(state[i]);
  return p;
}

std::vector<double> probabilities(const DensityMatrix& state) {
  std::vector<double> p(state.dim());
  for (uint64_t i = 0; i < state.dim(); ++i) p[i] = std::max(0.0, state(i, i).real());
  return p;
}

Counts sample_counts(const std::vector<double>& probs, int n_qubits, int shots, Rng& rng) {
  if (shots < 1) throw std::invalid_argument("shots must be at least 1");
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cdf[i] = acc;
  }
  std::vector<int> hits(probs.size(), 0);
  for (int s = 0; s < shots; ++s) {
    const double u = uniform01(rng) * acc;
    size_t idx = static_cast<size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    if (idx >= probs.size()) idx = probs.size() - 1;
    while (probs[idx] <= 0.0 && idx > 0) --idx;
    ++hits[idx];
  }
  Counts counts;
  for (size_t i = 0; i < hits.size(); ++i) {
    if (hits[i] > 0) counts[bitstring(i, n_qubits)] = hits[i];
  }
  return counts;
}

Counts measure_all(const StateVector& state, int shots, Rng& rng) {
  return sample_counts(probabilities(state), state.n_qubits(), shots, rng);
}

Counts measure_all(const DensityMatrix& state, int shots, Rng& rng) {
  return sample_counts(probabilities(state), state.n_qubits(), shots, rng);
}

Matrix partial_trace(const Matrix& op, int n_qubits, const QubitList& keep) {
  if (keep.empty()) throw std::invalid_argument("partial trace needs a nonempty keep set");
  std::vector<bool> kept(n_qubits + 1, false);
  for (int q : keep) {
    if (q < 1 || q > n_qubits) throw std::out_of_range("keep qubit " + std::to_string(q) + " out of range");
    if (kept[q]) throw std::invalid_argument("duplicate qubit in keep set");
    kept[q] = true;
  }
  QubitList traced;
  for (int q = 1; q <= n_qubits; ++q) {
    if (!kept[q]) traced.push_back(q);
  }
  const int k = static_cast<int>(keep.size());
  const int t = static_cast<int>(traced.size());
  auto spread = [n_qubits](uint64_t local, const QubitList& qubits) {
    const int m = static_cast<int>(qubits.size());
    uint64_t full = 0;
    for (int j = 0; j < m; ++j) {
      if ((local >> (m - 1 - j)) & 1) full |= uint64_t{1} << bit_position(n_qubits, qubits[j]);
    }
    return full;
  };
  const uint64_t dk = uint64_t{1} << k, dt = uint64_t{1} << t;
  std::vector<uint64_t> kidx(dk), tidx(dt);
  for (uint64_t i = 0; i < dk; ++i) kidx[i] = spread(i, keep);
  for (uint64_t i = 0; i < dt; ++i) tidx[i] = spread(i, traced);
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dk), static_cast<Eigen::Index>(dk));
  for (uint64_t c = 0; c < dk; ++c) {
    for (uint64_t r = 0; r < dk; ++r) {
      Complex acc = 0.0;
      for (uint64_t s = 0; s < dt; ++s) {
        acc += op(static_cast<Eigen::Index>(kidx[r] | tidx[s]), static_cast<Eigen::Index>(kidx[c] | tidx[s]));
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }
  return out;
}

DensityMatrix partial_trace(const DensityMatrix& state, const QubitList& keep) {
  return DensityMatrix::from_raw(static_cast<int>(keep.size()),
                                 partial_trace(state.matrix(), state.n_qubits(), keep));
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("fidelity of states with different qubit counts");
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("fidelity of states with different qubit counts");
  const Matrix sa = sqrt_psd(a.matrix());
  const Matrix inner = sa * b.matrix() * sa;
  Eigen::SelfAdjointEigenSolver<Matrix> es((inner + inner.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
  const double root = floored_roots(es.eigenvalues()).sum();
  return std::clamp(root * root, 0.0, 1.0);
}

double fidelity(const DensityMatrix& rho, const StateVector& psi) {
  if (rho.n_qubits() != psi.n_qubits()) throw std::invalid_argument("fidelity of states with different qubit counts");
  return (psi.amplitudes().adjoint() * rho.matrix() * psi.amplitudes())(0, 0).real();
}

Matrix circuit_unitary(const Circuit& circuit) {
  if (!circuit.is_unitary()) throw std::invalid_argument("circuit_unitary needs a gate-only circuit");
  const int n = circuit.n_qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix u = Matrix::Identity(dim, dim);
  for (const Operation& op : circuit.ops()) {
    const GateSpec& g = std::get<GateSpec>(op);
    std::vector<int> pos;
    for (int q : g.targets) pos.push_back(bit_position(n, q));
    const Matrix m = gate_matrix(g);
    for (Eigen::Index c = 0; c < dim; ++c) kernels::apply_matrix(u.col(c).data(), n, pos, m);
  }
  return u;
}

bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Eigen::Index br = 0, bc = 0;
  b.cwiseAbs().maxCoeff(&br, &bc);
  if (std::abs(b(br, bc)) < tol) return a.cwiseAbs().maxCoeff() < tol;
  Complex phase = a(br, bc) / b(br, bc);
  if (std::abs(std::abs(phase) - 1.0) > tol) return false;
  phase /= std::abs(phase);
  return (a - phase * b).cwiseAbs().maxCoeff() < tol;
}

}  // namespace qss
