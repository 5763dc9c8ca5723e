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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qss/channels/noise.h"
#include "qss/codes/code_spec.h"

namespace qss {

enum class Suite { kSwap, kEntfid, kPrivacy, kTables, kMcmVsDcm, kBaseline };

std::string_view suite_name(Suite s);
Suite parse_suite(std::string_view name);

/// Invalid or incompatible experiment settings.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
  Suite suite = Suite::kSwap;
  Scheme scheme = Scheme::kFiveQubit;
  /// Erased qubits; empty selects the scheme default ({1,2}, {6,7}, {5,6}).
  QubitList erased;
  DecodeMode decoder = DecodeMode::kMCM;
  int shots = 1024;
  int jobs = 10;
  uint64_t seed = 0;
  NoiseModel noise;
  bool mitigate = false;
  bool allow_uncorrectable = false;
  int workers = 1;
  std::string out;
  std::string format = "csv";
};

QubitList default_erasure(Scheme scheme);
/// Parses "1,2,5" (whitespace tolerated).
QubitList parse_subset(std::string_view text);
std::string subset_label(const QubitList& subset);

/// Throws ConfigError for out-of-range counts, unknown formats, erasures
/// the scheme cannot decode (unless uncorrectable erasures are allowed) and
/// unusable qutrit erasures.
void validate_config(const ExperimentConfig& config);

}  // namespace qss
