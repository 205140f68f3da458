// Copyright 2026 The dirsubsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// dss: command-line front end for the failure-probability estimators.
//
//   dss run       --config FILE [--out DIR] [--seed S] [--stream I]
//   dss replicate --config FILE [--runs M] --out DIR [--seed S] [--jobs J]
//   dss reference --problem P --samples K [--seed S]
//
// Exit codes: 0 success, 1 runtime failure, 2 configuration error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "dss/config.hpp"
#include "dss/errors.hpp"
#include "dss/estimators.hpp"
#include "dss/harness.hpp"
#include "dss/limit_state.hpp"
#include "dss/result_io.hpp"

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;

struct CommonArgs {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed;
};

dss::ExperimentConfig resolve(const CommonArgs& args) {
  auto cfg = dss::load_config(args.config);
  if (args.seed) {
    cfg.seed = *args.seed;
  }
  return cfg;
}

void print_warnings(const dss::ExperimentConfig& cfg) {
  if (cfg.algorithm != dss::Algorithm::dss) {
    return;
  }
  const auto& ls = dss::ProblemRegistry::global().lookup(cfg.problem);
  const auto part = dss::make_partition(cfg.partition, ls.dimension());
  for (const auto& w : dss::configuration_warnings(part, cfg.n)) {
    std::cerr << "warning: " << w << '\n';
  }
}

int cmd_run(const CommonArgs& args, std::uint64_t stream_id) {
  auto cfg = resolve(args);
  cfg.runs = 1;
  cfg.validate();
  print_warnings(cfg);
  const auto r = dss::run_once(cfg, stream_id);

  std::printf("problem        %s\n", cfg.problem.c_str());
  std::printf("algorithm      %s\n", dss::to_string(cfg.algorithm).c_str());
  std::printf("pf_hat         %.6e\n", r.pf_hat);
  std::printf("status         %s\n", dss::to_string(r.status).c_str());
  std::printf("levels         %zu\n", r.levels);
  std::printf("n_evals        %llu\n", static_cast<unsigned long long>(r.n_evals));
  if (cfg.algorithm == dss::Algorithm::dss) {
    std::printf("upper_bound    %.6e\n", r.unresolved_bound);
    for (const auto& b : r.bins) {
      std::printf("pi_hat_%-7zu %.6e  (%s", b.bin + 1, b.pi_hat, dss::to_string(b.status).c_str());
      if (b.finish_level) {
        std::printf(", T=%zu", *b.finish_level);
      }
      std::printf(")\n");
    }
  }
  if (!args.out.empty()) {
    std::ostringstream levels;
    dss::write_levels_csv(levels, r);
    dss::write_file(std::filesystem::path{args.out} / "levels.csv", levels.str());
  }
  if (r.status == dss::RunStatus::failed) {
    std::cerr << "run failed: " << r.message << '\n';
    return kExitRuntime;
  }
  return 0;
}

int cmd_replicate(const CommonArgs& args, std::optional<std::size_t> runs, std::size_t jobs) {
  auto cfg = resolve(args);
  if (runs) {
    cfg.runs = *runs;
  }
  cfg.validate();
  print_warnings(cfg);
  const auto results = dss::replicate(cfg, jobs);
  const auto pf_ref = cfg.pf_ref ? cfg.pf_ref : dss::find_reference_probability(cfg.problem);

  const std::filesystem::path out{args.out};
  std::ostringstream runs_csv;
  dss::write_runs_csv(runs_csv, results, cfg.algorithm);
  dss::write_file(out / "runs.csv", runs_csv.str());

  const auto hist = dss::log10_histogram(results);
  std::ostringstream hist_csv;
  dss::write_hist_csv(hist_csv, hist);
  dss::write_file(out / "hist.csv", hist_csv.str());

  const auto summary = dss::summarize(results, pf_ref);
  dss::write_file(out / "summary.json", dss::summary_to_json(summary, cfg).dump(2) + "\n");

  std::printf("%-12s %-10s %-10s %-8s %-10s %-6s %-6s\n", "mean_pf", "cov", "R", "N_T",
              "runs_used", "failed", "N");
  const std::string r_text =
      summary.r_metric ? std::to_string(*summary.r_metric).substr(0, 6) : std::string{"n/a"};
  std::printf("%-12.3e %-10.3f %-10s %-8.0f %-10zu %-6zu %-6zu\n", summary.mean_pf, summary.cov,
              r_text.c_str(), summary.mean_evals, summary.runs_used, summary.failed_runs, cfg.n);
  return 0;
}

int cmd_reference(const std::string& problem, double samples, std::uint64_t seed) {
  if (!(samples >= 1.0) || samples != std::floor(samples)) {
    throw dss::ConfigError("--samples must be a positive integer");
  }
  const auto& ls = dss::ProblemRegistry::global().lookup(problem);
  const auto ref = dss::recompute_reference(ls, static_cast<std::uint64_t>(samples), seed);
  std::printf("problem    %s\n", problem.c_str());
  std::printf("samples    %llu\n", static_cast<unsigned long long>(ref.samples));
  std::printf("estimate   %.6e\n", ref.estimate);
  std::printf("std_error  %.6e\n", ref.std_error);
  if (const auto stored = dss::find_reference_probability(problem)) {
    std::printf("stored     %.6e\n", *stored);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Failure-probability estimation by Monte Carlo, subset simulation and "
               "directional subset simulation"};
  app.require_subcommand(1);

  CommonArgs run_args;
  std::uint64_t stream_id = 0;
  auto* run = app.add_subcommand("run", "Execute one run and print its estimate");
  run->add_option("--config", run_args.config, "Run configuration file")->required();
  run->add_option("--out", run_args.out, "Directory for levels.csv");
  run->add_option("--seed", run_args.seed, "Override the configured seed");
  run->add_option("--stream", stream_id, "Stream id of the run (default 0)");

  CommonArgs rep_args;
  std::optional<std::size_t> runs;
  std::size_t jobs = 1;
  auto* rep = app.add_subcommand("replicate", "Run independent replications and summarize");
  rep->add_option("--config", rep_args.config, "Run configuration file")->required();
  rep->add_option("--runs", runs, "Number of runs (overrides the config)")
      ->check(CLI::PositiveNumber);
  rep->add_option("--out", rep_args.out, "Output directory")->required();
  rep->add_option("--seed", rep_args.seed, "Override the configured seed");
  rep->add_option("--jobs", jobs, "Worker threads (0 = all cores)");

  std::string problem;
  double samples = 0.0;
  std::uint64_t ref_seed = 1;
  auto* ref = app.add_subcommand("reference", "Brute-force Monte Carlo reference value");
  ref->add_option("--problem", problem, "Problem id")->required();
  ref->add_option("--samples", samples, "Number of samples, e.g. 1e7")->required();
  ref->add_option("--seed", ref_seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*run) {
      return cmd_run(run_args, stream_id);
    }
    if (*rep) {
      return cmd_replicate(rep_args, runs, jobs);
    }
    return cmd_reference(problem, samples, ref_seed);
  } catch (const dss::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}
