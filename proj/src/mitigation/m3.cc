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

#include "qss/mitigation/m3.h"

#include <cmath>
#include <stdexcept>

#include <Eigen/LU>

#include "qss/metrics/simplex.h"

namespace qss {
namespace {

// Restricted, column-normalized assignment matrix evaluated on demand.
class RestrictedOperator {
 public:
  RestrictedOperator(const std::vector<std::string>& keys, const ReadoutCalibration& calib)
      : keys_(keys), calib_(calib), col_norm_(keys.size(), 0.0) {
    for (size_t t = 0; t < keys_.size(); ++t) {
      for (size_t s = 0; s < keys_.size(); ++s) col_norm_[t] += calib_.entry(keys_[s], keys_[t]);
      if (col_norm_[t] <= 0.0) throw std::domain_error("restricted assignment matrix has an empty column");
    }
  }

  double entry(size_t s, size_t t) const { return calib_.entry(keys_[s], keys_[t]) / col_norm_[t]; }

  Eigen::VectorXd apply(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y = Eigen::VectorXd::Zero(x.size());
    for (size_t s = 0; s < keys_.size(); ++s) {
      for (size_t t = 0; t < keys_.size(); ++t) y(s) += entry(s, t) * x(t);
    }
    return y;
  }

  size_t size() const { return keys_.size(); }

 private:
  const std::vector<std::string>& keys_;
  const ReadoutCalibration& calib_;
  std::vector<double> col_norm_;
};

Eigen::VectorXd gmres(const RestrictedOperator& a, const Eigen::VectorXd& b, MitigationStats& stats) {
  const Eigen::Index n = b.size();
  const double bnorm = b.norm();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(n);
  if (bnorm == 0.0) return x;
  const int m = static_cast<int>(std::min<Eigen::Index>(kGmresMaxIterations, n));
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n, m + 1);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(m + 1, m);
  Eigen::VectorXd cs = Eigen::VectorXd::Zero(m), sn = Eigen::VectorXd::Zero(m);
  Eigen::VectorXd g = Eigen::VectorXd::Zero(m + 1);
  v.col(0) = b / bnorm;
  g(0) = bnorm;
  int k = 0;
  for (; k < m; ++k) {
    Eigen::VectorXd w = a.apply(v.col(k));
    for (int i = 0; i <= k; ++i) {
      h(i, k) = w.dot(v.col(i));
      w -= h(i, k) * v.col(i);
    }
    h(k + 1, k) = w.norm();
    if (h(k + 1, k) > 1e-300) v.col(k + 1) = w / h(k + 1, k);
    for (int i = 0; i < k; ++i) {
      const double t = cs(i) * h(i, k) + sn(i) * h(i + 1, k);
      h(i + 1, k) = -sn(i) * h(i, k) + cs(i) * h(i + 1, k);
      h(i, k) = t;
    }
    const double r = std::hypot(h(k, k), h(k + 1, k));
    if (r == 0.0) throw std::domain_error("restricted assignment matrix is singular");
    cs(k) = h(k, k) / r;
    sn(k) = h(k + 1, k) / r;
    h(k, k) = r;
    h(k + 1, k) = 0.0;
    g(k + 1) = -sn(k) * g(k);
    g(k) = cs(k) * g(k);
    if (std::abs(g(k + 1)) / bnorm < kGmresTolerance) {
      ++k;
      break;
    }
  }
  const Eigen::VectorXd y =
      h.topLeftCorner(k, k).triangularView<Eigen::Upper>().solve(g.head(k));
  x = v.leftCols(k) * y;
  stats.iterations = k;
  return x;
}

}  // namespace

QuasiDistribution mitigate(const Distribution& observed, const ReadoutCalibration& calib, MitigationStats* stats) {
  if (observed.empty()) throw std::invalid_argument("nothing to mitigate");
  std::vector<std::string> keys;
  Eigen::VectorXd y(static_cast<Eigen::Index>(observed.size()));
  for (const auto& [bits, w] : observed) {
    if (static_cast<int>(bits.size()) != calib.n_qubits()) {
      throw std::invalid_argument("bitstring '" + bits + "' does not match the calibration width");
    }
    y(static_cast<Eigen::Index>(keys.size())) = w;
    keys.push_back(bits);
  }
  const RestrictedOperator a(keys, calib);
  MitigationStats local;
  Eigen::VectorXd x;
  if (keys.size() <= kDirectSolveLimit) {
    const Eigen::Index k = static_cast<Eigen::Index>(keys.size());
    Eigen::MatrixXd dense(k, k);
    for (Eigen::Index s = 0; s < k; ++s) {
      for (Eigen::Index t = 0; t < k; ++t) dense(s, t) = a.entry(s, t);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(dense);
    if (!lu.isInvertible()) throw std::domain_error("restricted assignment matrix is singular");
    x = lu.solve(y);
  } else {
    local.iterative = true;
    x = gmres(a, y, local);
  }
  local.residual = (a.apply(x) - y).norm() / std::max(y.norm(), 1e-300);
  const double total = x.sum();
  if (std::abs(total) < 1e-12) throw std::domain_error("mitigated distribution has zero total weight");
  QuasiDistribution out;
  for (size_t i = 0; i < keys.size(); ++i) out[keys[i]] = x(static_cast<Eigen::Index>(i)) / total;
  if (stats) *stats = local;
  return out;
}

QuasiDistribution mitigate(const Counts& counts, const ReadoutCalibration& calib, MitigationStats* stats) {
  return mitigate(normalize_counts(counts), calib, stats);
}

Distribution to_probabilities(const QuasiDistribution& quasi) {
  std::vector<double> w;
  for (const auto& [_, v] : quasi) w.push_back(v);
  const std::vector<double> p = nearest_probability(w);
  Distribution out;
  size_t i = 0;
  for (const auto& [bits, _] : quasi) out[bits] = p[i++];
  return out;
}

}  // namespace qss
