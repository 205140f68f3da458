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

#include "dss/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "dss/errors.hpp"

namespace dss {

SubsetOptions ExperimentConfig::subset_options() const {
  SubsetOptions opts;
  opts.n = n;
  opts.rho = rho;
  opts.mcmc.corr = mcmc_corr;
  opts.max_levels = max_levels;
  opts.eps_tol = eps_tol;
  return opts;
}

void ExperimentConfig::validate(const ProblemRegistry& registry) const {
  const auto& ls = registry.lookup(problem);
  if (runs < 1) {
    throw ConfigError("runs must be >= 1");
  }
  if (algorithm == Algorithm::mcs) {
    if (n < 1) {
      throw ConfigError("N must be >= 1");
    }
  } else {
    subset_options().validate();
  }
  if (algorithm == Algorithm::dss) {
    (void)make_partition(partition, ls.dimension());
  }
  if (pf_ref && !(*pf_ref > 0.0 && *pf_ref <= 1.0)) {
    throw ConfigError("pf_ref must lie in (0, 1]");
  }
}

RunResult run_once(const ExperimentConfig& cfg, std::uint64_t stream_id,
                   bool keep_failure_samples, const ProblemRegistry& registry) {
  const auto& ls = registry.lookup(cfg.problem);
  RandomStream stream{cfg.seed, stream_id};
  switch (cfg.algorithm) {
    case Algorithm::mcs:
      return run_mcs(ls, cfg.n, stream);
    case Algorithm::ss: {
      auto opts = cfg.subset_options();
      opts.keep_failure_samples = keep_failure_samples;
      return run_ss(ls, opts, stream);
    }
    case Algorithm::dss: {
      auto opts = cfg.subset_options();
      opts.keep_failure_samples = keep_failure_samples;
      return run_dss(ls, make_partition(cfg.partition, ls.dimension()), opts, stream);
    }
  }
  throw ConfigError("invalid algorithm");
}

std::vector<RunResult> replicate(const ExperimentConfig& cfg, std::size_t jobs,
                                 bool keep_failure_samples, const ProblemRegistry& registry) {
  cfg.validate(registry);
  std::vector<RunResult> results(cfg.runs);
  if (jobs == 0) {
    jobs = std::max(1u, std::thread::hardware_concurrency());
  }
  jobs = std::min(jobs, cfg.runs);

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.runs; i = next++) {
      try {
        results[i] = run_once(cfg, i, keep_failure_samples, registry);
      } catch (...) {
        std::lock_guard lock{error_mutex};
        if (!error) {
          error = std::current_exception();
        }
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (std::size_t k = 0; k < jobs; ++k) {
      pool.emplace_back(worker);
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }
  return results;
}

double r_metric(std::span<const double> estimates, double pf_ref) {
  double sum_sq = 0.0;
  for (double pf : estimates) {
    const double e = std::log10(pf / pf_ref);
    sum_sq += e * e;
  }
  return std::sqrt(sum_sq / static_cast<double>(estimates.size()));
}

ReplicationSummary summarize(std::span<const RunResult> results, std::optional<double> pf_ref) {
  ReplicationSummary s;
  s.pf_ref = pf_ref;
  std::vector<double> used;
  std::size_t bins = 0;
  double evals = 0.0;
  for (const auto& r : results) {
    evals += static_cast<double>(r.n_evals);
    bins = std::max(bins, r.bins.size());
    if (r.status == RunStatus::failed) {
      ++s.failed_runs;
    } else if (!(r.pf_hat > 0.0)) {
      ++s.failed_runs;
      ++s.zero_runs;
    } else {
      used.push_back(r.pf_hat);
    }
  }
  if (used.empty()) {
    throw std::runtime_error("summarize: no run produced a positive estimate");
  }
  s.runs_used = used.size();
  s.mean_evals = evals / static_cast<double>(results.size());

  const double m = static_cast<double>(used.size());
  double sum = 0.0;
  for (double v : used) {
    sum += v;
  }
  s.mean_pf = sum / m;
  if (used.size() > 1) {
    double ss = 0.0;
    for (double v : used) {
      ss += (v - s.mean_pf) * (v - s.mean_pf);
    }
    s.cov = std::sqrt(ss / (m - 1.0)) / s.mean_pf;
  }
  if (pf_ref) {
    s.r_metric = r_metric(used, *pf_ref);
  }

  s.mean_pi_hat.assign(bins, 0.0);
  for (const auto& r : results) {
    if (r.status == RunStatus::failed || !(r.pf_hat > 0.0)) {
      continue;
    }
    for (const auto& b : r.bins) {
      s.mean_pi_hat[b.bin] += b.pi_hat / m;
    }
  }
  return s;
}

std::optional<double> find_reference_probability(const std::string& problem) {
  if (problem == "piecewise_linear") return 3.19e-5;
  if (problem == "beta_points") return 1.33e-6;
  return std::nullopt;
}

double reference_probability(const std::string& problem) {
  if (auto ref = find_reference_probability(problem)) {
    return *ref;
  }
  throw ConfigError("no stored reference probability for problem: " + problem);
}

ReferenceEstimate recompute_reference(const LimitState& ls, std::uint64_t samples,
                                      std::uint64_t seed) {
  RandomStream stream{seed, 0};
  const auto r = run_mcs(ls, samples, stream);
  const double k = static_cast<double>(samples);
  return {r.pf_hat, std::sqrt(r.pf_hat * (1.0 - r.pf_hat) / k), samples};
}

}  // namespace dss
