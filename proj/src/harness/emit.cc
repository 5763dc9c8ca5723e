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

#include "qss/harness/emit.h"

#include <cstdio>
#include <sstream>

namespace qss {
namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename T>
std::string opt(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, double>) {
    return num(*v);
  } else {
    return std::to_string(*v);
  }
}

}  // namespace

void write_csv(std::ostream& out, const SuiteResult& result) {
  out << kCsvHeader << "\n";
  for (const auto& r : result.records) {
    out << field(r.suite) << ',' << field(r.scheme) << ',' << field(r.subset) << ',' << field(r.decoder) << ','
        << r.job << ',' << opt(r.theta_deg) << ',' << opt(r.phi_deg) << ',' << num(r.metric) << ','
        << opt(r.metric_mitigated) << ',' << num(r.ci_low) << ',' << num(r.ci_high) << ',' << r.seed << ','
        << opt(r.exact) << "\n";
  }
}

std::string to_csv(const SuiteResult& result) {
  std::ostringstream out;
  write_csv(out, result);
  return out.str();
}

nlohmann::json config_to_json(const ExperimentConfig& c) {
  nlohmann::json j;
  j["suite"] = suite_name(c.suite);
  j["scheme"] = scheme_name(c.scheme);
  j["erase"] = c.erased.empty() ? default_erasure(c.scheme) : c.erased;
  j["decoder"] = decode_mode_name(c.decoder);
  j["shots"] = c.shots;
  j["jobs"] = c.jobs;
  j["seed"] = c.seed;
  j["noise"] = noise_to_json(c.noise);
  j["mitigate"] = c.mitigate;
  j["allow_uncorrectable"] = c.allow_uncorrectable;
  return j;
}

nlohmann::json record_to_json(const ResultRecord& r) {
  auto optional = [](const auto& v) -> nlohmann::json {
    if (!v) return nullptr;
    return *v;
  };
  return {{"suite", r.suite},
          {"scheme", r.scheme},
          {"subset", r.subset},
          {"decoder", r.decoder},
          {"job", r.job},
          {"theta_deg", optional(r.theta_deg)},
          {"phi_deg", optional(r.phi_deg)},
          {"metric", r.metric},
          {"metric_mitigated", optional(r.metric_mitigated)},
          {"ci_low", r.ci_low},
          {"ci_high", r.ci_high},
          {"seed", r.seed},
          {"exact", optional(r.exact)}};
}

nlohmann::json result_to_json(const ExperimentConfig& config, const SuiteResult& result) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : result.records) records.push_back(record_to_json(r));
  nlohmann::json summary = nlohmann::json::array();
  for (const auto& s : result.summary) {
    summary.push_back({{"label", s.label}, {"mean", s.mean}, {"ci_low", s.ci.low}, {"ci_high", s.ci.high}, {"jobs", s.count}});
  }
  return {{"config", config_to_json(config)},
          {"records", records},
          {"summary", summary},
          {"consistent", result.consistent}};
}

std::string to_json_text(const ExperimentConfig& config, const SuiteResult& result) {
  return result_to_json(config, result).dump(2) + "\n";
}

std::string summary_text(const SuiteResult& result) {
  std::ostringstream out;
  for (const auto& s : result.summary) {
    out << s.label << ": mean " << num(s.mean) << ", 99% CI [" << num(s.ci.low) << ", " << num(s.ci.high)
        << "] over " << s.count << " jobs\n";
  }
  for (const auto& m : result.messages) out << m << "\n";
  return out.str();
}

}  // namespace qss
