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

#include "qss/mitigation/readout.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qss {
namespace {

void check_width(const std::string& bits, int n) {
  if (static_cast<int>(bits.size()) != n) {
    throw std::invalid_argument("bitstring '" + bits + "' does not match " + std::to_string(n) + "-qubit calibration");
  }
}

}  // namespace

ReadoutCalibration ReadoutCalibration::make(std::vector<QubitReadout> qubits) {
  for (const auto& q : qubits) {
    if (!(q.p01 >= 0.0 && q.p01 <= 1.0 && q.p10 >= 0.0 && q.p10 <= 1.0)) {
      throw std::invalid_argument("readout error probabilities must lie in [0, 1]");
    }
  }
  return ReadoutCalibration{std::move(qubits)};
}

ReadoutCalibration ReadoutCalibration::uniform(int n_qubits, double p01, double p10) {
  return make(std::vector<QubitReadout>(n_qubits, QubitReadout{p01, p10}));
}

double ReadoutCalibration::prob(int q, int measured, int prepared) const {
  const QubitReadout& r = qubits.at(q - 1);
  if (prepared == 0) return measured ? r.p01 : 1.0 - r.p01;
  return measured ? 1.0 - r.p10 : r.p10;
}

double ReadoutCalibration::entry(const std::string& measured, const std::string& prepared) const {
  double v = 1.0;
  for (int q = 1; q <= n_qubits(); ++q) v *= prob(q, measured[q - 1] == '1', prepared[q - 1] == '1');
  return v;
}

nlohmann::json calibration_to_json(const ReadoutCalibration& calib) {
  nlohmann::json qs = nlohmann::json::array();
  for (const auto& q : calib.qubits) qs.push_back({{"p01", q.p01}, {"p10", q.p10}});
  return {{"qubits", qs}};
}

ReadoutCalibration calibration_from_json(const nlohmann::json& j) {
  std::vector<QubitReadout> qs;
  for (const auto& q : j.at("qubits")) qs.push_back({q.at("p01").get<double>(), q.at("p10").get<double>()});
  return ReadoutCalibration::make(std::move(qs));
}

Counts corrupt_counts(const Distribution& ideal, const ReadoutCalibration& calib, int shots, Rng& rng) {
  if (shots < 1) throw std::invalid_argument("shots must be at least 1");
  if (ideal.empty()) throw std::invalid_argument("ideal distribution is empty");
  std::vector<std::string> keys;
  std::vector<double> cdf;
  double acc = 0.0;
  for (const auto& [bits, p] : ideal) {
    check_width(bits, calib.n_qubits());
    if (p < 0.0) throw std::invalid_argument("ideal distribution has a negative weight");
    acc += p;
    keys.push_back(bits);
    cdf.push_back(acc);
  }
  Counts out;
  for (int s = 0; s < shots; ++s) {
    const double u = uniform01(rng) * acc;
    size_t idx = static_cast<size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    if (idx >= keys.size()) idx = keys.size() - 1;
    std::string bits = keys[idx];
    for (int q = 1; q <= calib.n_qubits(); ++q) {
      const int prepared = bits[q - 1] == '1';
      const double flip = calib.prob(q, 1 - prepared, prepared);
      if (uniform01(rng) < flip) bits[q - 1] = prepared ? '0' : '1';
    }
    ++out[bits];
  }
  return out;
}

Distribution apply_readout(const Distribution& ideal, const ReadoutCalibration& calib) {
  const int n = calib.n_qubits();
  Distribution out;
  for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
    const std::string measured = bitstring(m, n);
    double v = 0.0;
    for (const auto& [prepared, p] : ideal) {
      check_width(prepared, n);
      v += calib.entry(measured, prepared) * p;
    }
    out[measured] = v;
  }
  return out;
}

Distribution normalize_counts(const Counts& counts) {
  double total = 0.0;
  for (const auto& [_, c] : counts) total += c;
  if (total <= 0.0) throw std::invalid_argument("counts are empty");
  Distribution out;
  for (const auto& [bits, c] : counts) out[bits] = c / total;
  return out;
}

double total_variation(const Distribution& a, const Distribution& b) {
  std::set<std::string> keys;
  for (const auto& [k, _] : a) keys.insert(k);
  for (const auto& [k, _] : b) keys.insert(k);
  double tv = 0.0;
  for (const auto& k : keys) {
    const auto ia = a.find(k), ib = b.find(k);
    tv += std::abs((ia == a.end() ? 0.0 : ia->second) - (ib == b.end() ? 0.0 : ib->second));
  }
  return tv / 2.0;
}

}  // namespace qss
