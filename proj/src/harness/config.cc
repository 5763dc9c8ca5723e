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

#include "qss/harness/config.h"

#include <sstream>

#include "qss/codes/qutrit.h"
#include "qss/codes/schemes.h"

namespace qss {

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::kSwap: return "swap";
    case Suite::kEntfid: return "entfid";
    case Suite::kPrivacy: return "privacy";
    case Suite::kTables: return "tables";
    case Suite::kMcmVsDcm: return "mcm-vs-dcm";
    case Suite::kBaseline: return "baseline";
  }
  return "unknown";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::kSwap, Suite::kEntfid, Suite::kPrivacy, Suite::kTables, Suite::kMcmVsDcm, Suite::kBaseline}) {
    if (suite_name(s) == name) return s;
  }
  throw ConfigError("unknown suite '" + std::string(name) + "'");
}

QubitList default_erasure(Scheme scheme) {
  switch (scheme) {
    case Scheme::kFiveQubit: return {1, 2};
    case Scheme::kSteane: return {6, 7};
    case Scheme::kQutrit: return {5, 6};
  }
  return {};
}

QubitList parse_subset(std::string_view text) {
  QubitList out;
  std::string token;
  std::stringstream ss{std::string(text)};
  while (std::getline(ss, token, ',')) {
    const auto b = token.find_first_not_of(" \t"), e = token.find_last_not_of(" \t");
    if (b == std::string::npos) throw ConfigError("empty entry in subset '" + std::string(text) + "'");
    token = token.substr(b, e - b + 1);
    size_t used = 0;
    int q = 0;
    try {
      q = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ConfigError("invalid qubit index '" + token + "'");
    }
    if (used != token.size()) throw ConfigError("invalid qubit index '" + token + "'");
    out.push_back(q);
  }
  return out;
}

std::string subset_label(const QubitList& subset) {
  std::string s;
  for (int q : subset) s += (s.empty() ? "" : ",") + std::to_string(q);
  return s;
}

void validate_config(const ExperimentConfig& c) {
  if (c.shots < 1) throw ConfigError("--shots must be at least 1");
  if (c.jobs < 1) throw ConfigError("--jobs must be at least 1");
  if (c.workers < 1) throw ConfigError("--workers must be at least 1");
  if (c.format != "csv" && c.format != "json") throw ConfigError("--format must be csv or json");
  if (c.suite == Suite::kPrivacy || c.suite == Suite::kTables) return;
  const CodeSpec& code = get_code(c.scheme);
  QubitList erased;
  try {
    erased = normalize_subset(c.erased.empty() ? default_erasure(c.scheme) : c.erased, code.n_physical);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("--erase: ") + e.what());
  }
  if (erased.empty()) throw ConfigError("--erase must name at least one qubit");
  if (!code.is_stabilizer()) {
    try {
      qutrit_pair_for_erasure(erased);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
    return;
  }
  if (!code.has_table(erased)) {
    if (!c.allow_uncorrectable) {
      throw ConfigError("erasure {" + subset_label(erased) + "} is not correctable for " + code.name +
                        "; pass --allow-uncorrectable to study it");
    }
    try {
      canonical_decoder_subset(code, erased);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }
}

}  // namespace qss
