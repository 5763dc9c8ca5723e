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

#include "qss/harness/runner.h"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <thread>

#include "qss/channels/pipeline_channel.h"
#include "qss/codes/access.h"
#include "qss/codes/qutrit.h"
#include "qss/codes/schemes.h"
#include "qss/harness/seeds.h"
#include "qss/metrics/entanglement_fidelity.h"
#include "qss/metrics/swap_test.h"
#include "qss/metrics/tomography.h"
#include "qss/mitigation/m3.h"

namespace qss {
namespace {

constexpr int kTomographyReplicates = 200;

struct Context {
  const ExperimentConfig& config;
  const CodeSpec& code;
  PipelineSpec pipeline;
  GateHook hook;
  std::string subset;
};

Context make_context(const ExperimentConfig& config) {
  const CodeSpec& code = get_code(config.scheme);
  PipelineSpec spec;
  spec.erased = normalize_subset(config.erased.empty() ? default_erasure(config.scheme) : config.erased, code.n_physical);
  spec.mode = config.decoder;
  if (code.is_stabilizer() && !code.has_table(spec.erased)) spec.decoder_subset = canonical_decoder_subset(code, spec.erased);
  return {config, code, spec, make_noise_hook(config.noise), subset_label(spec.erased)};
}

ReadoutCalibration readout_for(const ExperimentConfig& c, int n_qubits) {
  return ReadoutCalibration::uniform(n_qubits, c.noise.readout_p01, c.noise.readout_p10);
}

ResultRecord base_record(const Context& ctx, int job, uint64_t seed) {
  ResultRecord r;
  r.suite = std::string(suite_name(ctx.config.suite));
  r.scheme = std::string(scheme_name(ctx.config.scheme));
  r.subset = ctx.subset;
  r.decoder = std::string(decode_mode_name(ctx.config.decoder));
  r.job = job;
  r.seed = seed;
  return r;
}

// SWAP test of the processed secret against a fresh copy, with readout
// noise on the ancilla and optional mitigation.
void fill_swap(ResultRecord& r, const ExperimentConfig& c, const DensityMatrix& out, const StateVector& psi, Rng& rng) {
  const double p0 = swap_test(out, psi, std::nullopt, rng).exact_p0;
  const ReadoutCalibration calib = readout_for(c, 1);
  const Counts counts = corrupt_counts({{"0", p0}, {"1", 1.0 - p0}}, calib, c.shots, rng);
  const int zeros = counts.count("0") ? counts.at("0") : 0;
  r.metric = static_cast<double>(zeros) / c.shots;
  r.exact = p0;
  if (c.mitigate) {
    const Distribution p = to_probabilities(mitigate(counts, calib));
    r.metric_mitigated = p.count("0") ? p.at("0") : 0.0;
  }
  const Interval iv = cover(bootstrap_rate(zeros, c.shots, rng), r.metric);
  r.ci_low = iv.low;
  r.ci_high = iv.high;
}

DensityMatrix run_secret(const Context& ctx, const StateVector& psi) {
  const Matrix out = run_pipeline(ctx.code, psi.amplitudes() * psi.amplitudes().adjoint(), ctx.pipeline, ctx.hook);
  return DensityMatrix::from_raw(qubits_for_dim(static_cast<uint64_t>(out.rows())), out);
}

// Identity pipeline: the secret stays on its qubits while every two-qubit
// gate of the real pipeline is replaced by a noisy identity.
Matrix run_identity(const Context& ctx, const Matrix& secret_op) {
  const int n = ctx.code.n_physical;
  Matrix op = embed_secret_operator(ctx.code, secret_op);
  const double p = ctx.config.noise.two_qubit_depolarizing;
  const Circuit circuit = pipeline_circuit(ctx.code, ctx.pipeline);
  for (const Operation& o : circuit.ops()) {
    const GateSpec* g = std::get_if<GateSpec>(&o);
    if (const auto* cg = std::get_if<ConditionalOp>(&o)) g = &cg->gate;
    if (g && g->targets.size() == 2) depolarize(op, n, g->targets, p);
  }
  return partial_trace(op, n, ctx.code.secret_qubits);
}

double phi_fidelity(const DensityMatrix& rho, int d) {
  return fidelity(rho, phi_plus(d, rho.n_qubits() / 2));
}

// Tomography of (id (x) N)(Phi+_d) with readout noise; fills metric,
// mitigated metric and a parametric-bootstrap interval.
void fill_tomography(ResultRecord& r, const ExperimentConfig& c, const Channel& channel, int d, Rng& rng) {
  const DensityMatrix target = phi_plus_output(channel, d);
  const int n = target.n_qubits();
  const ReadoutCalibration calib = readout_for(c, n);
  TomographyData data{n, c.shots, {}};
  for (const auto& [s, p] : tomography_probabilities(target)) {
    Distribution ideal;
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i] > 0.0) ideal[bitstring(i, n)] = p[i];
    }
    data.settings[s] = corrupt_counts(ideal, calib, c.shots, rng);
  }
  r.metric = phi_fidelity(tomography_reconstruct(data), d);
  r.exact = entanglement_fidelity(channel, d);
  if (c.mitigate) {
    TomographyProbabilities probs;
    for (const auto& [s, counts] : data.settings) {
      std::vector<double> p(uint64_t{1} << n, 0.0);
      for (const auto& [bits, w] : to_probabilities(mitigate(counts, calib))) p[parse_bitstring(bits)] = w;
      probs[s] = std::move(p);
    }
    r.metric_mitigated = phi_fidelity(tomography_reconstruct(probs, n), d);
  }
  std::vector<double> reps;
  for (int k = 0; k < kTomographyReplicates; ++k) {
    TomographyData boot{n, c.shots, {}};
    for (const auto& [s, counts] : data.settings) {
      std::vector<double> freq(uint64_t{1} << n, 0.0);
      for (const auto& [bits, w] : counts) freq[parse_bitstring(bits)] = static_cast<double>(w) / c.shots;
      boot.settings[s] = sample_counts(freq, n, c.shots, rng);
    }
    reps.push_back(phi_fidelity(tomography_reconstruct(boot), d));
  }
  const Interval iv = cover(percentile_interval(std::move(reps)), r.metric);
  r.ci_low = iv.low;
  r.ci_high = iv.high;
}

std::vector<ResultRecord> run_jobs(const ExperimentConfig& c,
                                   const std::function<std::vector<ResultRecord>(int, uint64_t)>& job_fn) {
  std::vector<std::vector<ResultRecord>> slots(c.jobs);
  std::atomic<int> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    for (int j = next++; j < c.jobs; j = next++) {
      try {
        slots[j] = job_fn(j, job_seed(c.seed, j));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const int threads = std::min(c.workers, c.jobs);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  std::vector<ResultRecord> out;
  for (auto& s : slots) out.insert(out.end(), s.begin(), s.end());
  return out;
}

void set_angles(ResultRecord& r, const SampledAngles& a) {
  r.theta_deg = a.first_deg;
  r.phi_deg = a.second_deg;
}

SecretKind secret_kind(const CodeSpec& code) { return code.is_stabilizer() ? SecretKind::kQubit : SecretKind::kQutrit; }

std::vector<ResultRecord> privacy_records(const ExperimentConfig& c, SuiteResult& result) {
  const CodeSpec& code = get_code(c.scheme);
  const int n = code.n_physical;
  std::vector<QubitList> subsets;
  if (code.is_stabilizer()) {
    for (uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
      QubitList s;
      for (int q = 1; q <= n; ++q) {
        if ((mask >> (q - 1)) & 1) s.push_back(q);
      }
      subsets.push_back(s);
    }
  } else {
    subsets = {{1, 2}, {3, 4}, {5, 6}, {1, 2, 3, 4}, {1, 2, 5, 6}, {3, 4, 5, 6}};
  }
  std::map<QubitList, SubsetClass> classes;
  std::vector<ResultRecord> out;
  int job = 0;
  for (const auto& s : subsets) {
    const SubsetClass cls = classify_subset(code, s);
    classes[s] = cls;
    ResultRecord r;
    r.suite = "privacy";
    r.scheme = code.name;
    r.subset = subset_label(s);
    r.decoder = std::string(subset_class_name(cls));
    r.job = job++;
    r.metric = secret_dependence(code, s);
    r.exact = r.metric;
    r.ci_low = r.ci_high = r.metric;
    r.seed = c.seed;
    out.push_back(r);
  }
  for (const auto& [s, cls] : classes) {
    if (cls != SubsetClass::kAuthorized) continue;
    QubitList comp;
    for (int q = 1; q <= n; ++q) {
      if (!std::binary_search(s.begin(), s.end(), q)) comp.push_back(q);
    }
    auto it = classes.find(comp);
    if (it != classes.end() && it->second == SubsetClass::kAuthorized) {
      result.consistent = false;
      result.messages.push_back("subset {" + subset_label(s) + "} and its complement are both authorized");
    }
  }
  return out;
}

std::vector<ResultRecord> table_records(const ExperimentConfig& c, SuiteResult& result) {
  std::vector<ResultRecord> out;
  int job = 0;
  for (Scheme scheme : {Scheme::kFiveQubit, Scheme::kSteane}) {
    const CodeSpec& code = get_code(scheme);
    for (const auto& st : code.stored_tables) {
      const TableReport rep = table_consistency_check(code.table(st.table.subset), st.table);
      ResultRecord r;
      r.suite = "tables";
      r.scheme = code.name;
      r.subset = subset_label(st.table.subset);
      r.decoder = st.name;
      r.job = job++;
      r.metric = static_cast<double>(rep.mismatches.size());
      r.exact = static_cast<double>(rep.rows_compared);
      r.ci_low = r.ci_high = r.metric;
      r.seed = c.seed;
      out.push_back(r);
      if (!rep.equal()) {
        result.consistent = false;
        for (const auto& m : rep.mismatches) {
          result.messages.push_back(st.name + ": syndrome " + m.syndrome + " derived " + m.derived + " stored " + m.stored);
        }
      }
    }
  }
  return out;
}

void summarize(const ExperimentConfig& c, SuiteResult& result) {
  std::map<std::string, std::vector<double>> groups;
  std::vector<std::string> order;
  auto add = [&](const std::string& label, double v) {
    if (!groups.count(label)) order.push_back(label);
    groups[label].push_back(v);
  };
  for (const auto& r : result.records) {
    switch (c.suite) {
      case Suite::kSwap: add("swap", r.metric); break;
      case Suite::kEntfid: add("entfid", r.metric); break;
      case Suite::kMcmVsDcm: add(r.decoder, r.metric); break;
      case Suite::kBaseline: add("baseline-" + r.decoder, r.metric); break;
      default: return;
    }
    if (r.metric_mitigated) add(std::string(c.suite == Suite::kBaseline ? "baseline-" + r.decoder : (c.suite == Suite::kMcmVsDcm ? r.decoder : std::string(suite_name(c.suite)))) + "-mitigated", *r.metric_mitigated);
  }
  Rng rng(splitmix64(c.seed ^ 0x53554d4d415259ULL));
  for (const auto& label : order) {
    const auto& v = groups[label];
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= static_cast<double>(v.size());
    result.summary.push_back({label, round12(mean), bootstrap_mean(v, rng), static_cast<int>(v.size())});
    result.summary.back().ci = cover(result.summary.back().ci, mean);
    result.summary.back().ci.low = round12(result.summary.back().ci.low);
    result.summary.back().ci.high = round12(result.summary.back().ci.high);
  }
}

void round_record(ResultRecord& r) {
  r.metric = round12(r.metric);
  if (r.metric_mitigated) r.metric_mitigated = round12(*r.metric_mitigated);
  if (r.exact) r.exact = round12(*r.exact);
  r.ci_low = round12(r.ci_low);
  r.ci_high = round12(r.ci_high);
}

}  // namespace

double round12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  double out = std::strtod(buf, nullptr);
  return out == 0.0 ? 0.0 : out;
}

SuiteResult run_suite(const ExperimentConfig& config) {
  validate_config(config);
  SuiteResult result;
  switch (config.suite) {
    case Suite::kPrivacy:
      result.records = privacy_records(config, result);
      break;
    case Suite::kTables:
      result.records = table_records(config, result);
      break;
    case Suite::kSwap: {
      const Context ctx = make_context(config);
      result.records = run_jobs(config, [&](int job, uint64_t seed) {
        Rng rng(seed);
        const SampledAngles a = sample_angles(secret_kind(ctx.code), rng);
        const StateVector psi = prepare_secret(a.spec);
        ResultRecord r = base_record(ctx, job, seed);
        set_angles(r, a);
        fill_swap(r, config, run_secret(ctx, psi), psi, rng);
        return std::vector<ResultRecord>{r};
      });
      break;
    }
    case Suite::kMcmVsDcm: {
      ExperimentConfig mcm = config, dcm = config;
      mcm.decoder = DecodeMode::kMCM;
      dcm.decoder = DecodeMode::kDCM;
      const Context cm = make_context(mcm), cd = make_context(dcm);
      result.records = run_jobs(config, [&](int job, uint64_t seed) {
        std::vector<ResultRecord> out;
        for (const Context* ctx : {&cm, &cd}) {
          Rng rng(seed);
          const SampledAngles a = sample_angles(secret_kind(ctx->code), rng);
          const StateVector psi = prepare_secret(a.spec);
          ResultRecord r = base_record(*ctx, job, seed);
          r.suite = "mcm-vs-dcm";
          set_angles(r, a);
          fill_swap(r, config, run_secret(*ctx, psi), psi, rng);
          out.push_back(r);
        }
        return out;
      });
      break;
    }
    case Suite::kEntfid: {
      const Context ctx = make_context(config);
      const Channel channel = pipeline_channel(ctx.code, ctx.pipeline,
                                               config.noise.two_qubit_depolarizing > 0.0
                                                   ? std::optional<double>(config.noise.two_qubit_depolarizing)
                                                   : std::nullopt);
      const int d = ctx.code.secret_dim();
      result.records = run_jobs(config, [&](int job, uint64_t seed) {
        Rng rng(seed);
        ResultRecord r = base_record(ctx, job, seed);
        fill_tomography(r, config, channel, d, rng);
        return std::vector<ResultRecord>{r};
      });
      break;
    }
    case Suite::kBaseline: {
      const Context ctx = make_context(config);
      const int n_secret = static_cast<int>(ctx.code.secret_qubits.size());
      const Channel identity = channel_from_choi(
          choi_of_map([&](const Matrix& m) { return run_identity(ctx, m); }, n_secret), n_secret, n_secret);
      const int d = ctx.code.secret_dim();
      result.records = run_jobs(config, [&](int job, uint64_t seed) {
        Rng rng(seed);
        const SampledAngles a = sample_angles(secret_kind(ctx.code), rng);
        const StateVector psi = prepare_secret(a.spec);
        ResultRecord swap = base_record(ctx, job, seed);
        swap.decoder = "swap";
        set_angles(swap, a);
        const Matrix out = run_identity(ctx, psi.amplitudes() * psi.amplitudes().adjoint());
        fill_swap(swap, config, DensityMatrix::from_raw(n_secret, out), psi, rng);
        ResultRecord ent = base_record(ctx, job, seed);
        ent.decoder = "entfid";
        fill_tomography(ent, config, identity, d, rng);
        return std::vector<ResultRecord>{swap, ent};
      });
      break;
    }
  }
  for (auto& r : result.records) round_record(r);
  summarize(config, result);
  return result;
}

}  // namespace qss
