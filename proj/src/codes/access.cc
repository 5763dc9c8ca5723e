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

#include "qss/codes/access.h"

#include <cmath>
#include <stdexcept>

#include "qss/codes/pipeline.h"
#include "qss/codes/secret.h"
#include "qss/qcore/simulator.h"

namespace qss {

std::vector<StateVector> probe_secrets(const CodeSpec& code) {
  const double r2 = 1.0 / std::sqrt(2.0), r3 = 1.0 / std::sqrt(3.0);
  const Complex i(0.0, 1.0);
  if (code.is_stabilizer()) {
    auto q = [](Complex a, Complex b) {
      Vector v(2);
      v << a, b;
      return StateVector::from_amplitudes(std::move(v));
    };
    return {q(1, 0), q(0, 1), q(r2, r2), q(r2, i * r2)};
  }
  return {qutrit_state(1, 0, 0),       qutrit_state(0, 1, 0),           qutrit_state(0, 0, 1),
          qutrit_state(r2, r2, 0), qutrit_state(r2, 0, i * r2), qutrit_state(r3, r3, r3)};
}

DensityMatrix reduced_share_state(const CodeSpec& code, const StateVector& secret, const QubitList& subset) {
  return partial_trace(DensityMatrix::from_pure(encode(code, secret)), normalize_subset(subset, code.n_physical));
}

double secret_dependence(const CodeSpec& code, const QubitList& subset) {
  const auto probes = probe_secrets(code);
  const DensityMatrix first = reduced_share_state(code, probes[0], subset);
  double worst = 0.0;
  for (size_t k = 1; k < probes.size(); ++k) {
    worst = std::max(worst, trace_distance(first, reduced_share_state(code, probes[k], subset)));
  }
  return worst;
}

SubsetClass classify_subset(const CodeSpec& code, const QubitList& subset, double tol) {
  const QubitList s = normalize_subset(subset, code.n_physical);
  if (s.empty() || static_cast<int>(s.size()) == code.n_physical) {
    throw std::invalid_argument("classification needs a nonempty proper subset");
  }
  QubitList complement;
  for (int q = 1, j = 0; q <= code.n_physical; ++q) {
    if (j < static_cast<int>(s.size()) && s[j] == q) {
      ++j;
    } else {
      complement.push_back(q);
    }
  }
  bool authorized;
  if (code.is_stabilizer()) {
    authorized = derive_entries(code.encoding, code.generators, code.secret_qubits[0], complement).consistent();
  } else {
    int whole = 0;
    for (int k = 1; k <= 3; ++k) {
      bool hi = false, lo = false;
      for (int q : s) {
        hi |= q == 2 * k - 1;
        lo |= q == 2 * k;
      }
      whole += hi && lo;
    }
    authorized = whole >= 2;
  }
  if (authorized) return SubsetClass::kAuthorized;
  return secret_dependence(code, s) < tol ? SubsetClass::kUnauthorizedPrivate : SubsetClass::kUnauthorizedLeaky;
}

}  // namespace qss
