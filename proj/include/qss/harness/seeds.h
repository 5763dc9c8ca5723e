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

#pragma once

#include <cstdint>

#include "qss/codes/secret.h"
#include "qss/qcore/rng.h"

namespace qss {

/// Seed of job `job`: splitmix64(master ^ splitmix64(job + 1)).
uint64_t job_seed(uint64_t master_seed, int job);

struct SampledAngles {
  SecretSpec spec;
  /// Qubit: theta and phi. Qutrit: theta1 and theta2.
  int first_deg = 0;
  int second_deg = 0;
};

/// Qubit: theta from {0..180} degrees, phi from {0..360}. Qutrit: theta1
/// from {0..360}, theta2 from {0..180}. Uniform over the inclusive 1-degree
/// grids.
SampledAngles sample_angles(SecretKind kind, Rng& rng);

}  // namespace qss
