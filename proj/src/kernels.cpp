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

#include "dss/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "dss/errors.hpp"

namespace dss {

void McmcConfig::validate() const {
  if (!(corr > 0.0 && corr < 1.0)) {
    throw ConfigError("mcmc_corr must lie in (0, 1)");
  }
}

SamplingRegion::SamplingRegion(std::vector<double> thresholds, std::vector<bool> active)
    : thresholds_{std::move(thresholds)}, active_{std::move(active)} {
  if (thresholds_.size() != active_.size()) {
    throw std::invalid_argument("SamplingRegion: thresholds/active size mismatch");
  }
}

SamplingRegion SamplingRegion::unconstrained(std::size_t bins) {
  return SamplingRegion{std::vector<double>(bins, std::numeric_limits<double>::infinity()),
                        std::vector<bool>(bins, true)};
}

SamplingRegion SamplingRegion::below(double threshold) {
  return SamplingRegion{{threshold}, {true}};
}

bool mcmc_step(Particle& current, const SamplingRegion& region, const McmcConfig& cfg,
               RandomStream& stream, const LimitState& ls, const Partition& partition,
               EvalCounter& counter) {
  const double scale = std::sqrt(1.0 - cfg.corr * cfg.corr);
  Point proposal(current.x.size());
  for (std::size_t i = 0; i < proposal.size(); ++i) {
    proposal[i] = cfg.corr * current.x[i] + scale * stream.normal();
  }
  const BinIndex bin = partition.classify(proposal);
  if (!region.admits_bin(bin)) {
    return false;
  }
  const double g = ls.evaluate(proposal, counter);
  if (!region.contains(bin, g)) {
    return false;
  }
  current.x = std::move(proposal);
  current.g = g;
  current.bin = bin;
  return true;
}

std::vector<std::size_t> residual_resample(std::size_t seeds, std::size_t target,
                                           RandomStream& stream) {
  if (seeds == 0) {
    throw ExtinctionError("residual_resample: no seeds");
  }
  std::vector<std::size_t> counts(seeds, target / seeds);
  const std::size_t remainder = target - seeds * (target / seeds);
  for (std::size_t r = 0; r < remainder; ++r) {
    ++counts[stream.uniform_index(seeds)];
  }
  return counts;
}

double interp_quantile(std::span<const double> values, double rho) {
  if (values.empty()) {
    throw std::invalid_argument("interp_quantile: empty input");
  }
  if (!(rho > 0.0 && rho < 1.0)) {
    throw std::invalid_argument("interp_quantile: rho must lie in (0, 1)");
  }
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  const std::size_t k = sorted.size();
  const double h = static_cast<double>(k - 1) * rho + 1.0;
  const double lower = std::floor(h);
  const auto lo = static_cast<std::size_t>(lower);  // one-based
  if (lo >= k) {
    return sorted[k - 1];
  }
  const double frac = h - lower;
  return sorted[lo - 1] + frac * (sorted[lo] - sorted[lo - 1]);
}

}  // namespace dss
