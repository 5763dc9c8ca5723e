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

#include <ostream>
#include <string>

#include <json.hpp>

#include "qss/harness/config.h"
#include "qss/harness/runner.h"

namespace qss {

inline constexpr const char* kCsvHeader =
    "suite,scheme,subset,decoder,job,theta_deg,phi_deg,metric,metric_mitigated,ci_low,ci_high,seed,exact";

void write_csv(std::ostream& out, const SuiteResult& result);
std::string to_csv(const SuiteResult& result);

nlohmann::json config_to_json(const ExperimentConfig& config);
nlohmann::json record_to_json(const ResultRecord& record);
/// {"config", "records", "summary", "consistent"}.
nlohmann::json result_to_json(const ExperimentConfig& config, const SuiteResult& result);
std::string to_json_text(const ExperimentConfig& config, const SuiteResult& result);

/// One human-readable line per summary entry.
std::string summary_text(const SuiteResult& result);

}  // namespace qss
