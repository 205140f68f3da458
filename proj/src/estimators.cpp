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

#include "dss/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "dss/errors.hpp"

namespace dss {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Consecutive empty levels after which an active bin is declared starved.
constexpr std::size_t kStarvationLevels = 3;
constexpr double kMinExpectedPerBin = 10.0;

std::vector<Particle> initial_population(const LimitState& ls, const Partition& partition,
                                         std::size_t n, RandomStream& stream,
                                         EvalCounter& counter) {
  std::vector<Particle> pop(n);
  for (auto& p : pop) {
    p.x = sample_standard_normal(stream, ls.dimension());
    p.g = ls.evaluate(p.x, counter);
    p.bin = partition.classify(p.x);
  }
  return pop;
}

/// Replaces `pop` by N particles grown from its members inside `region`.
/// Each seed is kept and extended by (offspring - 1) MCMC steps. Returns M.
std::size_t propagate(std::vector<Particle>& pop, const SamplingRegion& region,
                      const SubsetOptions& opts, RandomStream& stream, const LimitState& ls,
                      const Partition& partition, EvalCounter& counter) {
  std::vector<Particle> seeds;
  for (auto& p : pop) {
    if (region.contains(p.bin, p.g)) {
      seeds.push_back(std::move(p));
    }
  }
  const auto offspring = residual_resample(seeds.size(), opts.n, stream);
  std::vector<Particle> next;
  next.reserve(opts.n);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (offspring[i] == 0) {
      continue;
    }
    Particle state = seeds[i];
    next.push_back(state);
    for (std::size_t step = 1; step < offspring[i]; ++step) {
      mcmc_step(state, region, opts.mcmc, stream, ls, partition, counter);
      next.push_back(state);
    }
  }
  pop = std::move(next);
  return seeds.size();
}

double failing_fraction(std::span<const double> gvals) {
  const auto fails = std::count_if(gvals.begin(), gvals.end(), [](double g) { return g <= 0.0; });
  return static_cast<double>(fails) / static_cast<double>(gvals.size());
}

void collect_failures(std::span<const Particle> pop, std::optional<BinIndex> bin,
                      std::vector<Point>& out) {
  for (const auto& p : pop) {
    if (p.g <= 0.0 && (!bin || p.bin == *bin)) {
      out.push_back(p.x);
    }
  }
}

void check_dimensions(const LimitState& ls, const Partition& partition) {
  if (ls.dimension() != partition.dimension()) {
    throw ConfigError("partition dimension " + std::to_string(partition.dimension()) +
                      " does not match problem dimension " + std::to_string(ls.dimension()));
  }
}

}  // namespace

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::mcs:
      return "mcs";
    case Algorithm::ss:
      return "ss";
    case Algorithm::dss:
      return "dss";
  }
  return "?";
}

std::string to_string(RunStatus s) {
  switch (s) {
    case RunStatus::converged:
      return "converged";
    case RunStatus::max_levels:
      return "max_levels";
    case RunStatus::exhausted:
      return "exhausted";
    case RunStatus::failed:
      return "failed";
  }
  return "?";
}

std::string to_string(BinStatus s) {
  switch (s) {
    case BinStatus::finished:
      return "finished";
    case BinStatus::unresolved:
      return "unresolved";
    case BinStatus::starved:
      return "starved";
  }
  return "?";
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "mcs") return Algorithm::mcs;
  if (name == "ss") return Algorithm::ss;
  if (name == "dss") return Algorithm::dss;
  throw ConfigError("unknown algorithm: " + name);
}

void SubsetOptions::validate() const {
  if (n < 2) {
    throw ConfigError("N must be >= 2");
  }
  if (!(rho > 0.0 && rho < 1.0)) {
    throw ConfigError("level_prob (rho) must lie in (0, 1)");
  }
  if (!(eps_tol > 0.0)) {
    throw ConfigError("eps_tol must be positive");
  }
  if (max_levels < 1) {
    throw ConfigError("max_levels must be >= 1");
  }
  mcmc.validate();
}

RunResult run_mcs(const LimitState& ls, std::size_t n, RandomStream& stream) {
  if (n < 1) {
    throw ConfigError("MCS sample count must be >= 1");
  }
  EvalCounter counter;
  Point x(ls.dimension());
  std::uint64_t fails = 0;
  for (std::size_t i = 0; i < n; ++i) {
    stream.fill_normal(x);
    if (ls.evaluate(x, counter) <= 0.0) {
      ++fails;
    }
  }
  RunResult r;
  r.algorithm = Algorithm::mcs;
  r.pf_hat = static_cast<double>(fails) / static_cast<double>(n);
  r.levels = 1;
  r.n_evals = counter.count();
  r.bins.push_back({0, 0, r.pf_hat, r.pf_hat, BinStatus::finished});
  r.records.push_back({0, {0.0}, {n}, 0, r.pf_hat, 0.0});
  return r;
}

RunResult run_ss(const LimitState& ls, const SubsetOptions& opts, RandomStream& stream) {
  opts.validate();
  const Partition whole = make_single_bin(ls.dimension());
  EvalCounter counter;
  RunResult r;
  r.algorithm = Algorithm::ss;

  auto pop = initial_population(ls, whole, opts.n, stream, counter);
  SamplingRegion region = SamplingRegion::unconstrained(1);
  double current = kInf;
  std::size_t seeds = 0;
  std::vector<double> gvals;

  for (std::size_t t = 0;; ++t) {
    if (opts.observer) {
      opts.observer(t, pop, region);
    }
    gvals.clear();
    for (const auto& p : pop) {
      gvals.push_back(p.g);
    }
    const double next = interp_quantile(gvals, opts.rho);
    LevelRecord rec{t, {current}, {pop.size()}, seeds, 0.0, 0.0};
    r.levels = t + 1;

    const bool reached = next <= 0.0;
    if (reached || t + 1 >= opts.max_levels) {
      const double p_last = failing_fraction(gvals);
      r.pf_hat = std::pow(opts.rho, static_cast<double>(t)) * p_last;
      r.status = reached ? RunStatus::converged : RunStatus::max_levels;
      r.bins.push_back({0, t, p_last, r.pf_hat, BinStatus::finished});
      rec.finished_mass = r.pf_hat;
      r.records.push_back(std::move(rec));
      if (opts.keep_failure_samples) {
        collect_failures(pop, std::nullopt, r.failure_samples);
      }
      break;
    }
    rec.upper_bound = std::pow(opts.rho, static_cast<double>(t + 1));
    r.records.push_back(std::move(rec));

    current = next;
    region = SamplingRegion::below(current);
    try {
      seeds = propagate(pop, region, opts, stream, ls, whole, counter);
    } catch (const ExtinctionError& e) {
      r.status = RunStatus::failed;
      r.message = e.what();
      r.bins.push_back({0, std::nullopt, 0.0, 0.0, BinStatus::unresolved});
      break;
    }
  }
  r.n_evals = counter.count();
  return r;
}

RunResult run_dss(const LimitState& ls, const Partition& partition, const SubsetOptions& opts,
                  RandomStream& stream) {
  opts.validate();
  check_dimensions(ls, partition);
  const std::size_t bins = partition.bin_count();
  const auto& p0 = partition.probabilities();

  EvalCounter counter;
  RunResult r;
  r.algorithm = Algorithm::dss;
  r.bins.resize(bins);
  for (BinIndex j = 0; j < bins; ++j) {
    r.bins[j].bin = j;
  }

  std::vector<double> gamma(bins, kInf);
  std::vector<bool> active(bins, true);
  std::vector<std::size_t> empty_streak(bins, 0);
  double starved_mass = 0.0;
  std::size_t seeds = 0;

  auto pop = initial_population(ls, partition, opts.n, stream, counter);
  SamplingRegion region = SamplingRegion::unconstrained(bins);
  std::vector<std::vector<double>> per_bin(bins);

  for (std::size_t t = 0;; ++t) {
    if (opts.observer) {
      opts.observer(t, pop, region);
    }
    for (auto& v : per_bin) {
      v.clear();
    }
    for (const auto& p : pop) {
      per_bin[p.bin].push_back(p.g);
    }

    LevelRecord rec;
    rec.level = t;
    rec.thresholds = gamma;
    rec.seeds = seeds;
    rec.counts.resize(bins);
    for (BinIndex j = 0; j < bins; ++j) {
      rec.counts[j] = per_bin[j].size();
    }

    const double rho_next = std::pow(opts.rho, static_cast<double>(t + 1));
    for (BinIndex j = 0; j < bins; ++j) {
      if (!active[j]) {
        continue;
      }
      if (per_bin[j].empty()) {
        if (++empty_streak[j] >= kStarvationLevels) {
          active[j] = false;
          r.bins[j].status = BinStatus::starved;
          starved_mass += p0[j] * rho_next;
        }
        continue;
      }
      empty_streak[j] = 0;
      const double q = std::min(interp_quantile(per_bin[j], opts.rho), gamma[j]);
      if (q > 0.0) {
        gamma[j] = q;
        continue;
      }
      gamma[j] = 0.0;
      active[j] = false;
      auto& out = r.bins[j];
      out.status = BinStatus::finished;
      out.finish_level = t;
      out.p_fin = failing_fraction(per_bin[j]);
      out.pi_hat = p0[j] * std::pow(opts.rho, static_cast<double>(t)) * out.p_fin;
      if (opts.keep_failure_samples) {
        collect_failures(pop, j, r.failure_samples);
      }
    }

    double finished = 0.0;
    double bound = starved_mass;
    for (BinIndex j = 0; j < bins; ++j) {
      if (r.bins[j].status == BinStatus::finished) {
        finished += r.bins[j].pi_hat;
      } else if (active[j]) {
        bound += p0[j] * rho_next;
      }
    }
    rec.finished_mass = finished;
    rec.upper_bound = bound;
    r.records.push_back(std::move(rec));
    r.levels = t + 1;
    r.pf_hat = finished;
    r.unresolved_bound = bound;

    const bool within_tol = bound <= opts.eps_tol * finished;
    const bool any_active = std::find(active.begin(), active.end(), true) != active.end();
    if (!any_active) {
      r.status = within_tol ? RunStatus::converged : RunStatus::exhausted;
      break;
    }
    if (finished > 0.0 && within_tol) {
      r.status = RunStatus::converged;
      break;
    }
    if (t + 1 >= opts.max_levels) {
      r.status = RunStatus::max_levels;
      break;
    }

    region = SamplingRegion{gamma, active};
    try {
      seeds = propagate(pop, region, opts, stream, ls, partition, counter);
    } catch (const ExtinctionError& e) {
      r.status = RunStatus::failed;
      r.message = e.what();
      break;
    }
  }
  r.n_evals = counter.count();
  return r;
}

std::vector<std::string> configuration_warnings(const Partition& partition, std::size_t n) {
  std::vector<std::string> warnings;
  const auto& probs = partition.probabilities();
  const double smallest = *std::min_element(probs.begin(), probs.end());
  const double expected = static_cast<double>(n) * smallest;
  if (expected < kMinExpectedPerBin) {
    warnings.push_back("smallest bin expects only " + std::to_string(expected) +
                       " initial particles (N * min p0 < " +
                       std::to_string(static_cast<int>(kMinExpectedPerBin)) + ")");
  }
  return warnings;
}

}  // namespace dss
