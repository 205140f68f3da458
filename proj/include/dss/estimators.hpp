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

#ifndef DSS_ESTIMATORS_HPP
#define DSS_ESTIMATORS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dss/kernels.hpp"
#include "dss/limit_state.hpp"
#include "dss/partition.hpp"
#include "dss/random.hpp"

namespace dss {

enum class Algorithm { mcs, ss, dss };

enum class RunStatus {
  converged,   // stopping rule met
  max_levels,  // level budget exhausted
  exhausted,   // no active bin left, but starved bins keep the bound above tolerance
  failed,      // extinction: no seed survived into the next region
};

enum class BinStatus { finished, unresolved, starved };

std::string to_string(Algorithm a);
std::string to_string(RunStatus s);
std::string to_string(BinStatus s);
/// Throws ConfigError for unrecognised names.
Algorithm algorithm_from_string(const std::string& name);

/// Final bookkeeping for one bin.
struct BinOutcome {
  BinIndex bin = 0;
  std::optional<std::size_t> finish_level;  // T_j, empty while unfinished
  double p_fin = 0.0;                       // fraction of failing particles at T_j
  double pi_hat = 0.0;                      // p0_j * rho^T_j * p_fin
  BinStatus status = BinStatus::unresolved;
};

/// Snapshot taken after the thresholds of the next level have been chosen.
struct LevelRecord {
  std::size_t level = 0;
  std::vector<double> thresholds;   // gamma_{t,j} the level-t particles obey (+inf at t = 0)
  std::vector<std::size_t> counts;  // N_{t,j}
  std::size_t seeds = 0;            // M_t; 0 for the initial Monte Carlo level
  double finished_mass = 0.0;       // D: sum of pi_hat over finished bins
  double upper_bound = 0.0;         // U: residual mass of unfinished bins
};

struct RunResult {
  Algorithm algorithm = Algorithm::mcs;
  double pf_hat = 0.0;
  std::vector<BinOutcome> bins;
  std::size_t levels = 0;  // number of thresholds computed, T
  std::uint64_t n_evals = 0;
  double unresolved_bound = 0.0;
  RunStatus status = RunStatus::converged;
  std::vector<LevelRecord> records;
  std::vector<Point> failure_samples;  // filled when requested
  std::string message;                 // diagnostic for failed runs
};

/// Called once per level with the full population and the region it was drawn from.
using LevelObserver =
    std::function<void(std::size_t level, std::span<const Particle>, const SamplingRegion&)>;

struct SubsetOptions {
  std::size_t n = 1000;  // particles per level
  double rho = 0.2;      // level probability
  McmcConfig mcmc{};
  std::size_t max_levels = 50;
  double eps_tol = 1e-3;  // dSS stopping tolerance
  bool keep_failure_samples = false;
  LevelObserver observer{};

  /// Throws ConfigError when a parameter is out of its domain.
  void validate() const;
};

/// Plain Monte Carlo: fraction of n i.i.d. draws with g <= 0.
RunResult run_mcs(const LimitState& ls, std::size_t n, RandomStream& stream);

/// Subset simulation with adaptive rho-quantile thresholds.
RunResult run_ss(const LimitState& ls, const SubsetOptions& opts, RandomStream& stream);

/**
 * Directional subset simulation: bin-wise thresholds over `partition`, with
 * each bin frozen once its threshold reaches zero. Stops when the upper
 * bound of the unfinished bins falls below eps_tol times the finished mass.
 */
RunResult run_dss(const LimitState& ls, const Partition& partition, const SubsetOptions& opts,
                  RandomStream& stream);

/// Per-level records of a completed run.
inline const std::vector<LevelRecord>& level_snapshot(const RunResult& r) { return r.records; }

/// Human-readable warnings about a dSS setup, e.g. bins expected to start nearly empty.
std::vector<std::string> configuration_warnings(const Partition& partition, std::size_t n);

}  // namespace dss

#endif  // DSS_ESTIMATORS_HPP
