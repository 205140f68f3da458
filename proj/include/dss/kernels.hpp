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

#ifndef DSS_KERNELS_HPP
#define DSS_KERNELS_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "dss/limit_state.hpp"
#include "dss/partition.hpp"
#include "dss/random.hpp"

namespace dss {

/// A population member: its coordinates, cached g-value and bin.
struct Particle {
  Point x;
  double g = 0.0;
  BinIndex bin = 0;
};

/// Autoregressive proposal xi = corr * theta + sqrt(1 - corr^2) * eps.
struct McmcConfig {
  double corr = 0.8;

  /// Throws ConfigError unless 0 < corr < 1.
  void validate() const;
};

/**
 * The region an MCMC chain is confined to: the union over active bins j of
 * {theta in B_j : g(theta) <= threshold_j}.
 */
class SamplingRegion {
 public:
  SamplingRegion(std::vector<double> thresholds, std::vector<bool> active);

  /// Every bin active with threshold +inf.
  static SamplingRegion unconstrained(std::size_t bins);
  /// One bin, {g <= threshold}.
  static SamplingRegion below(double threshold);

  [[nodiscard]] bool admits_bin(BinIndex j) const { return active_.at(j); }
  [[nodiscard]] bool contains(BinIndex j, double g) const {
    return admits_bin(j) && g <= thresholds_[j];
  }
  [[nodiscard]] std::size_t bin_count() const noexcept { return thresholds_.size(); }

 private:
  std::vector<double> thresholds_;
  std::vector<bool> active_;
};

/**
 * One Metropolis step targeting N(0, I) restricted to `region`.
 *
 * The proposal leaves N(0, I) invariant, so acceptance reduces to the
 * region's indicator. Proposals falling into an inactive bin are rejected
 * without evaluating g. Returns true when the proposal was accepted;
 * `current` is left untouched otherwise.
 */
bool mcmc_step(Particle& current, const SamplingRegion& region, const McmcConfig& cfg,
               RandomStream& stream, const LimitState& ls, const Partition& partition,
               EvalCounter& counter);

/**
 * Residual resampling of `seeds` equally weighted seeds into `target`
 * offspring: floor(target / seeds) each, then the remainder by independent
 * uniform draws. Throws ExtinctionError when seeds == 0.
 */
std::vector<std::size_t> residual_resample(std::size_t seeds, std::size_t target,
                                           RandomStream& stream);

/**
 * Quantile of order rho by linear interpolation of the empirical CDF:
 * x_(floor h) + frac(h) (x_(floor h + 1) - x_(floor h)), h = (k - 1) rho + 1,
 * with one-based order statistics. Throws std::invalid_argument on empty
 * input or rho outside (0, 1).
 */
double interp_quantile(std::span<const double> values, double rho);

}  // namespace dss

#endif  // DSS_KERNELS_HPP
