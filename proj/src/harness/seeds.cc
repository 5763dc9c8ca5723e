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

#include "qss/harness/seeds.h"

#include <numbers>

namespace qss {

uint64_t job_seed(uint64_t master_seed, int job) {
  return splitmix64(master_seed ^ splitmix64(static_cast<uint64_t>(job) + 1));
}

SampledAngles sample_angles(SecretKind kind, Rng& rng) {
  constexpr double kDeg = std::numbers::pi / 180.0;
  SampledAngles a;
  if (kind == SecretKind::kQubit) {
    a.first_deg = static_cast<int>(uniform_index(rng, 181));
    a.second_deg = static_cast<int>(uniform_index(rng, 361));
    a.spec = SecretSpec::qubit(a.first_deg * kDeg, a.second_deg * kDeg);
  } else {
    a.first_deg = static_cast<int>(uniform_index(rng, 361));
    a.second_deg = static_cast<int>(uniform_index(rng, 181));
    a.spec = SecretSpec::qutrit(a.first_deg * kDeg, a.second_deg * kDeg);
  }
  return a;
}

}  // namespace qss
