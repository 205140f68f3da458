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

#ifndef DSS_HARNESS_HPP
#define DSS_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dss/estimators.hpp"
#include "dss/limit_state.hpp"
#include "dss/partition.hpp"

namespace dss {

/// Everything needed to reproduce a batch of runs.
struct ExperimentConfig {
  std::string problem = "piecewise_linear";
  Algorithm algorithm = Algorithm::dss;
  std::size_t n = 1000;
  double rho = 0.2;
  double mcmc_corr = 0.8;
  PartitionSpec partition{};
  double eps_tol = 1e-3;
  std::size_t max_levels = 50;
  std::size_t runs = 1;
  std::uint64_t seed = 1;
  std::optional<double> pf_ref;  // overrides the stored reference when set

  /// Subset options derived from this config.
  [[nodiscard]] SubsetOptions subset_options() const;

  /// Throws ConfigError unless every field lies in its domain and the
  /// problem and partition can be built from `registry`.
  void validate(const ProblemRegistry& registry = ProblemRegistry::global()) const;
};

/// Statistics of a batch, computed over successful runs with a positive estimate.
struct ReplicationSummary {
  double mean_pf = 0.0;
  double cov = 0.0;                   // sample std (1/(m-1)) over mean
  std::optional<double> r_metric;     // absent without a reference value
  double mean_evals = 0.0;            // over all runs, failed ones included
  std::size_t runs_used = 0;
  std::size_t failed_runs = 0;        // failed status or zero estimate
  std::size_t zero_runs = 0;          // the zero-estimate part of failed_runs
  std::vector<double> mean_pi_hat;    // per bin, over used runs
  std::optional<double> pf_ref;
};

/// Runs cfg.runs independent replications; replication i uses stream i.
/// `jobs` worker threads (0 picks the hardware concurrency). Output order and
/// content do not depend on `jobs`.
std::vector<RunResult> replicate(const ExperimentConfig& cfg, std::size_t jobs = 1,
                                 bool keep_failure_samples = false,
                                 const ProblemRegistry& registry = ProblemRegistry::global());

/// One run of `cfg` on stream `stream_id`.
RunResult run_once(const ExperimentConfig& cfg, std::uint64_t stream_id,
                   bool keep_failure_samples = false,
                   const ProblemRegistry& registry = ProblemRegistry::global());

/// Throws std::runtime_error when no run is usable.
ReplicationSummary summarize(std::span<const RunResult> results, std::optional<double> pf_ref);

/// sqrt(mean(log10(pf / pf_ref)^2)).
double r_metric(std::span<const double> estimates, double pf_ref);

/// Stored brute-force reference values for the built-in benchmarks.
/// Throws ConfigError for problems without one.
double reference_probability(const std::string& problem);
std::optional<double> find_reference_probability(const std::string& problem);

struct ReferenceEstimate {
  double estimate = 0.0;
  double std_error = 0.0;  // binomial, sqrt(p (1 - p) / K) at the estimate
  std::uint64_t samples = 0;
};

/// Recomputes a reference by plain Monte Carlo with `samples` draws.
ReferenceEstimate recompute_reference(const LimitState& ls, std::uint64_t samples,
                                      std::uint64_t seed);

}  // namespace dss

#endif  // DSS_HARNESS_HPP
