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

#include "qss/metrics/tomography.h"

#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "qss/metrics/simplex.h"
#include "qss/stabilizer/pauli.h"

namespace qss {

std::vector<std::string> tomography_settings(int n_qubits) {
  std::vector<std::string> out{""};
  for (int q = 0; q < n_qubits; ++q) {
    std::vector<std::string> next;
    for (const auto& s : out) {
      for (char c : {'X', 'Y', 'Z'}) next.push_back(s + c);
    }
    out = std::move(next);
  }
  return out;
}

Circuit tomography_rotation(const std::string& setting) {
  Circuit c(static_cast<int>(setting.size()));
  for (size_t j = 0; j < setting.size(); ++j) {
    const int q = static_cast<int>(j) + 1;
    if (setting[j] == 'X') {
      c.h(q);
    } else if (setting[j] == 'Y') {
      c.sdg(q).h(q);
    } else if (setting[j] != 'Z') {
      throw std::invalid_argument("invalid tomography setting '" + setting + "'");
    }
  }
  return c;
}

TomographyProbabilities tomography_probabilities(const DensityMatrix& state) {
  TomographyProbabilities out;
  for (const auto& s : tomography_settings(state.n_qubits())) {
    Rng unused(0);
    out[s] = probabilities(apply_circuit(state, tomography_rotation(s), unused).state);
  }
  return out;
}

TomographyData tomography_collect(const DensityMatrix& state, int shots, Rng& rng) {
  if (shots < 1) throw std::invalid_argument("shots must be at least 1");
  TomographyData data{state.n_qubits(), shots, {}};
  for (const auto& [s, p] : tomography_probabilities(state)) data.settings[s] = sample_counts(p, state.n_qubits(), shots, rng);
  return data;
}

DensityMatrix tomography_reconstruct(const TomographyProbabilities& probs, int n) {
  const auto settings = tomography_settings(n);
  for (const auto& s : settings) {
    if (!probs.count(s)) throw std::invalid_argument("tomography data lacks setting " + s);
  }
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix rho = Matrix::Zero(dim, dim);
  static constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};
  for (uint64_t code = 0; code < (uint64_t{1} << (2 * n)); ++code) {
    PauliString p(n);
    for (int q = 1; q <= n; ++q) p.set_letter(q, kLetters[(code >> (2 * (n - q))) & 3]);
    double sum = 0.0;
    int used = 0;
    for (const auto& s : settings) {
      bool compatible = true;
      for (int q = 1; q <= n; ++q) compatible &= p.letter(q) == 'I' || p.letter(q) == s[q - 1];
      if (!compatible) continue;
      const auto& pr = probs.at(s);
      for (size_t idx = 0; idx < pr.size(); ++idx) {
        int parity = 0;
        for (int q = 1; q <= n; ++q) {
          if (p.letter(q) != 'I') parity ^= static_cast<int>((idx >> bit_position(n, q)) & 1);
        }
        sum += parity ? -pr[idx] : pr[idx];
      }
      ++used;
    }
    rho += (sum / used) * p.matrix();
  }
  return nearest_density_matrix(rho / static_cast<double>(dim));
}

DensityMatrix tomography_reconstruct(const TomographyData& data) {
  TomographyProbabilities probs;
  const uint64_t dim = uint64_t{1} << data.n_qubits;
  for (const auto& [s, counts] : data.settings) {
    std::vector<double> p(dim, 0.0);
    int total = 0;
    for (const auto& [bits, c] : counts) {
      p[parse_bitstring(bits)] += c;
      total += c;
    }
    if (total != data.shots) throw std::invalid_argument("setting " + s + " does not total the shot count");
    for (double& x : p) x /= total;
    probs[s] = std::move(p);
  }
  return tomography_reconstruct(probs, data.n_qubits);
}

DensityMatrix nearest_density_matrix(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es((hermitian + hermitian.adjoint()) / 2.0);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  const std::vector<double> proj = project_to_simplex(ev, 1.0);
  Eigen::VectorXd lam = Eigen::Map<const Eigen::VectorXd>(proj.data(), static_cast<Eigen::Index>(proj.size()));
  Matrix rho = es.eigenvectors() * lam.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  const int n = qubits_for_dim(static_cast<uint64_t>(rho.rows()));
  return DensityMatrix::from_raw(n, std::move(rho));
}

nlohmann::json tomography_to_json(const TomographyData& data) {
  nlohmann::json settings = nlohmann::json::object();
  for (const auto& [s, counts] : data.settings) settings[s] = counts;
  return {{"n", data.n_qubits}, {"shots", data.shots}, {"settings", settings}};
}

TomographyData tomography_from_json(const nlohmann::json& j) {
  TomographyData data;
  data.n_qubits = j.at("n").get<int>();
  data.shots = j.at("shots").get<int>();
  for (const auto& [s, counts] : j.at("settings").items()) data.settings[s] = counts.get<Counts>();
  if (data.settings.size() != tomography_settings(data.n_qubits).size()) {
    throw std::invalid_argument("tomography data must hold all 3^n settings");
  }
  return data;
}

}  // namespace qss
