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

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qss/harness/emit.h"
#include "qss/harness/runner.h"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitConsistency = 3;

struct Options {
  std::string scheme = "five_qubit";
  std::string erase;
  std::string decoder = "mcm";
  std::string noise;
};

qss::ExperimentConfig build_config(const std::string& suite, const Options& o, qss::ExperimentConfig c) {
  try {
    c.suite = qss::parse_suite(suite);
    c.scheme = qss::parse_scheme(o.scheme);
    c.decoder = qss::parse_decode_mode(o.decoder);
    if (!o.erase.empty()) c.erased = qss::parse_subset(o.erase);
    if (!o.noise.empty()) c.noise = qss::load_noise_file(o.noise);
  } catch (const qss::ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw qss::ConfigError(e.what());
  }
  qss::validate_config(c);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum secret sharing experiments"};
  app.require_subcommand(1, 1);
  Options opts;
  qss::ExperimentConfig config;

  for (const char* name : {"swap", "entfid", "privacy", "tables", "mcm-vs-dcm", "baseline"}) {
    CLI::App* sub = app.add_subcommand(name, std::string("run the ") + name + " suite");
    sub->add_option("--scheme", opts.scheme, "five_qubit | steane | qutrit");
    sub->add_option("--erase", opts.erase, "erased qubits, e.g. 1,2");
    sub->add_option("--decoder", opts.decoder, "mcm | dcm");
    sub->add_option("--shots", config.shots, "shots per job");
    sub->add_option("--jobs", config.jobs, "number of jobs");
    sub->add_option("--seed", config.seed, "master seed");
    sub->add_option("--noise", opts.noise, "noise configuration JSON");
    sub->add_flag("--mitigate", config.mitigate, "apply M3 readout mitigation");
    sub->add_flag("--allow-uncorrectable", config.allow_uncorrectable, "permit erasures the code cannot correct");
    sub->add_option("--workers", config.workers, "worker threads");
    sub->add_option("--out", config.out, "output file (default stdout)");
    sub->add_option("--format", config.format, "csv | json");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  qss::SuiteResult result;
  try {
    config = build_config(app.get_subcommands().front()->get_name(), opts, config);
    result = qss::run_suite(config);
  } catch (const qss::ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  const std::string text =
      config.format == "json" ? qss::to_json_text(config, result) : qss::to_csv(result);
  if (config.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(config.out, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << config.out << "\n";
      return kExitConfig;
    }
    out << text;
  }
  std::cerr << qss::summary_text(result);
  if (!result.consistent) {
    std::cerr << "consistency check failed\n";
    return kExitConsistency;
  }
  return 0;
}
