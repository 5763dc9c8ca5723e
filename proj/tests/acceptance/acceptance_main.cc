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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qss/channels/pipeline_channel.h"
#include "qss/codes/access.h"
#include "qss/codes/bundle.h"
#include "qss/codes/pipeline.h"
#include "qss/codes/qutrit.h"
#include "qss/codes/schemes.h"
#include "qss/harness/runner.h"
#include "qss/harness/seeds.h"
#include "qss/metrics/entanglement_fidelity.h"
#include "qss/metrics/swap_test.h"
#include "qss/metrics/tomography.h"
#include "qss/mitigation/m3.h"
#include "qss/qcore/native.h"

using namespace qss;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

StateVector random_qubit(Rng& rng) {
  const double theta = std::acos(1.0 - 2.0 * uniform01(rng));
  const double phi = 2.0 * std::numbers::pi * uniform01(rng);
  return prepare_secret(SecretSpec::qubit(theta, phi));
}

StateVector random_secret(const CodeSpec& code, Rng& rng) {
  if (code.is_stabilizer()) return random_qubit(rng);
  return prepare_secret(SecretSpec::qutrit(std::numbers::pi * uniform01(rng), std::numbers::pi * uniform01(rng)));
}

Matrix projector(const StateVector& psi) { return psi.amplitudes() * psi.amplitudes().adjoint(); }

std::vector<std::pair<const CodeSpec*, QubitList>> stored_erasures() {
  const CodeSpec& five = get_code(Scheme::kFiveQubit);
  const CodeSpec& steane = get_code(Scheme::kSteane);
  const CodeSpec& qutrit = get_code(Scheme::kQutrit);
  return {{&five, {1, 2}},       {&steane, {6, 7}},  {&steane, {5, 6, 7}}, {&steane, {4, 5, 6}},
          {&qutrit, {5, 6}},     {&qutrit, {1, 2}},  {&qutrit, {3, 4}}};
}

Outcome golden_tables() {
  const auto t0 = Clock::now();
  Outcome o;
  size_t rows = 0;
  for (Scheme s : {Scheme::kFiveQubit, Scheme::kSteane}) {
    const std::string key = s == Scheme::kFiveQubit ? "five_qubit" : "steane";
    const CodeSpec code = build_stabilizer_code(s, codes_bundle().at(key));
    for (const auto& st : code.stored_tables) {
      const CorrectionTable derived = derive_correction_table(code.encoding, code.generators,
                                                              code.secret_qubits.front(), st.table.subset);
      const TableReport rep = table_consistency_check(derived, st.table);
      rows += rep.rows_compared;
      if (!rep.equal() || derived.rows.size() != st.table.rows.size()) {
        o.pass = false;
        o.detail += st.name + " differs; ";
      }
    }
  }
  const double secs = seconds_since(t0);
  if (rows != 16 + 16 + 64) o.pass = false;
  if (secs >= 10.0) o.pass = false;
  o.detail += std::to_string(rows) + " rows compared in " + fmt(secs) + " s";
  return o;
}

Outcome round_trip() {
  const auto t0 = Clock::now();
  Outcome o;
  double worst = 1.0;
  Rng rng(20260101);
  for (const auto& [code, erased] : stored_erasures()) {
    for (DecodeMode mode : {DecodeMode::kMCM, DecodeMode::kDCM}) {
      PipelineSpec spec{erased, mode, std::nullopt};
      for (int k = 0; k < 100; ++k) {
        const StateVector psi = random_secret(*code, rng);
        const Matrix out = run_pipeline(*code, projector(psi), spec);
        const double f = fidelity(DensityMatrix::from_raw(psi.n_qubits(), out), psi);
        worst = std::min(worst, f);
      }
    }
  }
  const double secs = seconds_since(t0);
  o.pass = worst >= 1.0 - 1e-9 && secs < 60.0;
  o.detail = "worst fidelity 1 - " + fmt(1.0 - worst) + " over 1400 decodes in " + fmt(secs) + " s";
  return o;
}

Outcome privacy() {
  Outcome o;
  Rng rng(7);
  const CodeSpec& five = get_code(Scheme::kFiveQubit);
  const CodeSpec& steane = get_code(Scheme::kSteane);
  double five_dev = 0.0;
  for (uint32_t mask = 1; mask < 32; ++mask) {
    QubitList s;
    for (int q = 1; q <= 5; ++q) {
      if ((mask >> (q - 1)) & 1) s.push_back(q);
    }
    if (s.size() > 2) continue;
    for (int k = 0; k < 10; ++k) {
      const DensityMatrix r = reduced_share_state(five, random_qubit(rng), s);
      const Matrix mixed = Matrix::Identity(r.matrix().rows(), r.matrix().cols()) / static_cast<double>(r.matrix().rows());
      five_dev = std::max(five_dev, (r.matrix() - mixed).cwiseAbs().maxCoeff());
    }
  }
  double a5_dev = 0.0, a8_dev = 0.0, a8_pattern = 0.0;
  Matrix a8 = Matrix::Zero(16, 16);
  for (auto [r, c] : {std::pair{0, 0}, {0, 15}, {15, 0}, {15, 15}, {3, 3}, {3, 12}, {12, 3}, {12, 12},
                      {5, 5}, {5, 10}, {10, 5}, {10, 10}, {6, 6}, {6, 9}, {9, 6}, {9, 9}}) {
    a8(r, c) = 1.0 / 8.0;
  }
  for (int k = 0; k < 20; ++k) {
    const StateVector psi = random_qubit(rng);
    const DensityMatrix r567 = reduced_share_state(steane, psi, {5, 6, 7});
    a5_dev = std::max(a5_dev, (r567.matrix() - Matrix::Identity(8, 8) / 8.0).cwiseAbs().maxCoeff());
    const DensityMatrix r1357 = reduced_share_state(steane, psi, {1, 3, 5, 7});
    a8_pattern = std::max(a8_pattern, (r1357.matrix() - a8).cwiseAbs().maxCoeff());
    const DensityMatrix ref = reduced_share_state(steane, StateVector::basis(1, 0), {1, 3, 5, 7});
    a8_dev = std::max(a8_dev, trace_distance(r1357, ref));
  }
  const StateVector plus = prepare_secret(SecretSpec::qubit(std::numbers::pi / 2, 0.0));
  const double leak = trace_distance(reduced_share_state(steane, StateVector::basis(1, 0), {2, 4, 6}),
                                     reduced_share_state(steane, plus, {2, 4, 6}));
  o.pass = five_dev <= 1e-9 && a5_dev <= 1e-12 && a8_dev <= 1e-9 && a8_pattern <= 1e-9 && leak > 0.1;
  o.detail = "five-qubit dev " + fmt(five_dev) + ", {5,6,7} dev " + fmt(a5_dev) + ", {1,3,5,7} dependence " +
             fmt(a8_dev) + " pattern dev " + fmt(a8_pattern) + ", {2,4,6} trace distance " + fmt(leak);
  return o;
}

Outcome uncorrectable() {
  const CodeSpec& steane = get_code(Scheme::kSteane);
  PipelineSpec bad{{2, 4, 6}, DecodeMode::kMCM, canonical_decoder_subset(steane, {2, 4, 6})};
  const double f_bad = entanglement_fidelity(pipeline_channel(steane, bad), 2);
  const double f567 = entanglement_fidelity(pipeline_channel(steane, {{5, 6, 7}, DecodeMode::kMCM, std::nullopt}), 2);
  const double f456 = entanglement_fidelity(pipeline_channel(steane, {{4, 5, 6}, DecodeMode::kMCM, std::nullopt}), 2);
  Outcome o;
  o.pass = std::abs(f_bad - 0.25) <= 1e-6 && f567 >= 1.0 - 1e-9 && f456 >= 1.0 - 1e-9;
  o.detail = "F_e {2,4,6} = " + fmt(f_bad) + ", {5,6,7} = 1 - " + fmt(1.0 - f567) + ", {4,5,6} = 1 - " + fmt(1.0 - f456);
  return o;
}

Outcome mcm_dcm() {
  Outcome o;
  double worst = 0.0;
  Rng rng(11);
  for (Scheme s : {Scheme::kFiveQubit, Scheme::kSteane, Scheme::kQutrit}) {
    const CodeSpec& code = get_code(s);
    const QubitList erased = s == Scheme::kFiveQubit ? QubitList{1, 2} : s == Scheme::kSteane ? QubitList{6, 7} : QubitList{5, 6};
    for (int k = 0; k < 50; ++k) {
      const Matrix op = projector(random_secret(code, rng));
      const Matrix a = run_pipeline(code, op, {erased, DecodeMode::kMCM, std::nullopt});
      const Matrix b = run_pipeline(code, op, {erased, DecodeMode::kDCM, std::nullopt});
      worst = std::max(worst, (a - b).cwiseAbs().maxCoeff());
    }
  }
  o.pass = worst <= 1e-10;
  o.detail = "max entry difference " + fmt(worst) + " over 150 secrets";
  return o;
}

Outcome swap_statistics() {
  int within = 0;
  for (int run = 0; run < 100; ++run) {
    Rng rng(job_seed(424242, run));
    const StateVector a = random_qubit(rng), b = random_qubit(rng);
    const SwapTestResult r = swap_test(a, b, 1024, rng);
    const double p = r.exact_p0;
    if (std::abs(*r.sampled_rate - p) <= 3.0 * std::sqrt(p * (1.0 - p) / 1024.0) + 1e-12) ++within;
  }
  return {within >= 99, std::to_string(within) + "/100 runs within 3 sigma"};
}

Outcome mitigation() {
  const ReadoutCalibration calib3 = ReadoutCalibration::uniform(3, 0.03, 0.03);
  const Distribution ideal{{"000", 0.5}, {"111", 0.5}};
  int improved = 0;
  for (int t = 0; t < 100; ++t) {
    Rng rng(job_seed(99, t));
    const Counts counts = corrupt_counts(ideal, calib3, 1024, rng);
    const double raw = total_variation(normalize_counts(counts), ideal);
    const double mit = total_variation(to_probabilities(mitigate(counts, calib3)), ideal);
    if (mit < raw) ++improved;
  }
  Rng rng(5);
  Distribution ideal7;
  double total = 0.0;
  for (int k = 0; k < 24; ++k) {
    const double w = 0.1 + uniform01(rng);
    ideal7[bitstring(uniform_index(rng, 128), 7)] += w;
    total += w;
  }
  for (auto& [k, v] : ideal7) v /= total;
  std::vector<QubitReadout> qs;
  for (int q = 0; q < 7; ++q) qs.push_back({0.01 + 0.04 * uniform01(rng), 0.01 + 0.04 * uniform01(rng)});
  const ReadoutCalibration calib7 = ReadoutCalibration::make(qs);
  const QuasiDistribution back = mitigate(apply_readout(ideal7, calib7), calib7);
  double err = 0.0;
  for (const auto& [k, v] : back) err = std::max(err, std::abs(v - (ideal7.count(k) ? ideal7.at(k) : 0.0)));
  return {improved >= 95 && err <= 1e-6,
          std::to_string(improved) + "/100 trials improved; 7-qubit inversion error " + fmt(err)};
}

Outcome tomography() {
  Rng rng(3);
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k < 5; ++k) {
      Vector v(int64_t{1} << n);
      std::normal_distribution<double> g;
      for (auto& x : v) x = Complex(g(rng), g(rng));
      Matrix m = v * v.adjoint();
      Vector w(int64_t{1} << n);
      for (auto& x : w) x = Complex(g(rng), g(rng));
      m += 0.5 * w * w.adjoint();
      m /= m.trace();
      const DensityMatrix rho = DensityMatrix::from_matrix(m, 1e-9);
      const DensityMatrix back = tomography_reconstruct(tomography_probabilities(rho), n);
      worst = std::max(worst, (back.matrix() - rho.matrix()).cwiseAbs().maxCoeff());
    }
  }
  const CodeSpec& five = get_code(Scheme::kFiveQubit);
  const Channel ch = pipeline_channel(five, {{1, 2}, DecodeMode::kMCM, std::nullopt}, 0.01);
  const double exact = entanglement_fidelity(ch, 2);
  const DensityMatrix out = phi_plus_output(ch, 2);
  const DensityMatrix est = tomography_reconstruct(tomography_collect(out, 4096, rng));
  const double f = fidelity(est, phi_plus(2, 1));
  return {worst <= 1e-10 && std::abs(f - exact) <= 0.02,
          "round-trip error " + fmt(worst) + "; F_e exact " + fmt(exact) + " vs estimated " + fmt(f)};
}

Outcome native() {
  Rng rng(9);
  int ok = 0;
  for (int k = 0; k < 100; ++k) {
    const double theta = 4.0 * std::numbers::pi * (uniform01(rng) - 0.5);
    for (auto [axis, kind] : {std::pair{RotationAxis::kX, GateKind::kRX}, {RotationAxis::kY, GateKind::kRY}}) {
      const Matrix u = circuit_unitary(native_decomposition(axis, theta));
      if (equal_up_to_phase(u, gate_matrix(GateSpec::make(kind, {1}, {theta})), 1e-12)) ++ok;
    }
  }
  return {ok == 200, std::to_string(ok) + "/200 identities hold"};
}

Outcome noise_ordering() {
  ExperimentConfig c;
  c.suite = Suite::kSwap;
  c.noise.two_qubit_depolarizing = 0.01;
  c.seed = 2026;
  c.scheme = Scheme::kFiveQubit;
  const double five = run_suite(c).summary.at(0).mean;
  c.scheme = Scheme::kQutrit;
  const double qutrit = run_suite(c).summary.at(0).mean;
  return {qutrit <= five, "mean pass rate qutrit " + fmt(qutrit) + " vs five-qubit " + fmt(five)};
}

}  // namespace

int main() {
  const auto t0 = Clock::now();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"golden correction tables", golden_tables},
      {"noiseless round trip", round_trip},
      {"privacy of unauthorized sets", privacy},
      {"uncorrectable erasure", uncorrectable},
      {"MCM and DCM agree", mcm_dcm},
      {"SWAP test statistics", swap_statistics},
      {"readout mitigation", mitigation},
      {"tomography", tomography},
      {"native decomposition", native},
      {"noise ordering", noise_ordering},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << (i + 1) << " " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  const double secs = seconds_since(t0);
  std::cout << "total runtime " << fmt(secs) << " s" << (secs < 900.0 ? "" : " (over the 15 min budget)") << std::endl;
  return failed == 0 && secs < 900.0 ? 0 : 1;
}
