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

#include <optional>
#include <string>
#include <vector>

#include "qss/harness/bootstrap.h"
#include "qss/harness/config.h"

namespace qss {

struct ResultRecord {
  std::string suite;
  std::string scheme;
  std::string subset;
  std::string decoder;
  int job = 0;
  std::optional<int> theta_deg;
  std::optional<int> phi_deg;
  double metric = 0.0;
  std::optional<double> metric_mitigated;
  double ci_low = 0.0;
  double ci_high = 0.0;
  uint64_t seed = 0;
  std::optional<double> exact;

  bool operator==(const ResultRecord&) const = default;
};

/// Mean of one metric over jobs with its bootstrap-over-jobs interval.
struct SummaryEntry {
  std::string label;
  double mean = 0.0;
  Interval ci;
  int count = 0;
};

struct SuiteResult {
  std::vector<ResultRecord> records;
  std::vector<SummaryEntry> summary;
  /// False when a consistency check (tables, access-structure
  /// complementarity) failed.
  bool consistent = true;
  std::vector<std::string> messages;
};

/// Runs one experiment suite. Jobs run on `config.workers` threads, each
/// from its own seed, so the result does not depend on the worker count.
/// Throws ConfigError for invalid configurations.
SuiteResult run_suite(const ExperimentConfig& config);

/// Rounds to 12 significant digits so that CSV and JSON carry the same value.
double round12(double v);

}  // namespace qss
