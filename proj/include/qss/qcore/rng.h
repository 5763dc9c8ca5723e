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
#include <random>

namespace qss {

/// All stochastic operations draw from this engine. Helpers below avoid the
/// standard distributions so that sampled output is identical across
/// standard-library implementations.
using Rng = std::mt19937_64;

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
double uniform01(Rng& rng);

/// Uniform integer in [0, n) by rejection sampling. n must be positive.
uint64_t uniform_index(Rng& rng, uint64_t n);

uint64_t splitmix64(uint64_t x);

/// Independent stream number `index` derived from `master_seed`:
/// seed = splitmix64(master_seed ^ splitmix64(index + 1)).
Rng derive_stream(uint64_t master_seed, uint64_t index);

}  // namespace qss
