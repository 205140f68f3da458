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

#include "dss/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "dss/errors.hpp"

namespace dss {

namespace {
constexpr std::size_t kMaxOrthantDimension = 30;
}

std::string to_string(PartitionKind kind) {
  switch (kind) {
    case PartitionKind::single:
      return "single";
    case PartitionKind::angular:
      return "angular";
    case PartitionKind::halfspace:
      return "halfspace";
    case PartitionKind::orthants:
      return "orthants";
  }
  return "?";
}

PartitionKind partition_kind_from_string(const std::string& name) {
  if (name == "single") return PartitionKind::single;
  if (name == "angular") return PartitionKind::angular;
  if (name == "halfspace") return PartitionKind::halfspace;
  if (name == "orthants") return PartitionKind::orthants;
  throw ConfigError("unknown partition kind: " + name);
}

Partition::Partition(PartitionKind kind, std::size_t dimension, std::vector<double> probs)
    : kind_{kind}, dimension_{dimension}, probs_{std::move(probs)} {}

BinIndex Partition::classify(std::span<const double> p) const {
  if (p.size() != dimension_) {
    throw ConfigError("partition: expected dimension " + std::to_string(dimension_) +
                      ", got " + std::to_string(p.size()));
  }
  switch (kind_) {
    case PartitionKind::single:
      return 0;
    case PartitionKind::angular: {
      const double angle = std::atan2(p[1], p[0]);
      // First cut strictly greater than the angle; the sector before it owns the angle.
      const auto it = std::upper_bound(cuts_.begin(), cuts_.end(), angle);
      if (it == cuts_.begin()) {
        return cuts_.size() - 1;  // wrap-around sector
      }
      return static_cast<BinIndex>(std::distance(cuts_.begin(), it) - 1);
    }
    case PartitionKind::halfspace:
      return p[axis_ - 1] < 0.0 ? 0 : 1;
    case PartitionKind::orthants: {
      BinIndex j = 0;
      for (std::size_t i = 0; i < dimension_; ++i) {
        if (p[i] < 0.0) {
          j |= BinIndex{1} << i;
        }
      }
      return j;
    }
  }
  return 0;
}

Partition make_single_bin(std::size_t n) {
  if (n == 0) {
    throw ConfigError("single-bin partition: dimension must be >= 1");
  }
  return Partition{PartitionKind::single, n, {1.0}};
}

Partition make_angular_sectors_2d(std::vector<double> cuts) {
  constexpr double pi = std::numbers::pi;
  if (cuts.size() < 2) {
    throw ConfigError("angular partition: at least two cuts are required");
  }
  for (std::size_t k = 0; k < cuts.size(); ++k) {
    if (!(cuts[k] > -pi && cuts[k] <= pi)) {
      throw ConfigError("angular partition: cuts must lie in (-pi, pi]");
    }
    if (k > 0 && !(cuts[k] > cuts[k - 1])) {
      throw ConfigError("angular partition: cuts must be strictly increasing");
    }
  }
  std::vector<double> probs(cuts.size());
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    probs[k] = (cuts[k + 1] - cuts[k]) / (2.0 * pi);
  }
  // Remainder rather than a separate width so the probabilities sum to one exactly.
  double head = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    head += probs[k];
  }
  probs.back() = 1.0 - head;
  Partition part{PartitionKind::angular, 2, std::move(probs)};
  part.cuts_ = std::move(cuts);
  return part;
}

Partition make_halfspace(std::size_t axis, std::size_t n) {
  if (n == 0) {
    throw ConfigError("halfspace partition: dimension must be >= 1");
  }
  if (axis < 1 || axis > n) {
    throw ConfigError("halfspace partition: axis must be in 1.." + std::to_string(n));
  }
  Partition part{PartitionKind::halfspace, n, {0.5, 0.5}};
  part.axis_ = axis;
  return part;
}

Partition make_orthants(std::size_t n) {
  if (n == 0) {
    throw ConfigError("orthant partition: dimension must be >= 1");
  }
  if (n > kMaxOrthantDimension) {
    throw ConfigError("orthant partition: dimension " + std::to_string(n) +
                      " exceeds the bin-count limit (" +
                      std::to_string(kMaxOrthantDimension) + ")");
  }
  const std::size_t bins = std::size_t{1} << n;
  return Partition{PartitionKind::orthants, n,
                   std::vector<double>(bins, std::ldexp(1.0, -static_cast<int>(n)))};
}

Partition make_partition(const PartitionSpec& spec, std::size_t n) {
  if (spec.dimension != 0 && spec.dimension != n) {
    throw ConfigError("partition dimension " + std::to_string(spec.dimension) +
                      " does not match problem dimension " + std::to_string(n));
  }
  switch (spec.kind) {
    case PartitionKind::single:
      return make_single_bin(n);
    case PartitionKind::angular:
      if (n != 2) {
        throw ConfigError("angular partition requires a 2-dimensional problem");
      }
      return make_angular_sectors_2d(spec.cuts);
    case PartitionKind::halfspace:
      return make_halfspace(spec.axis, n);
    case PartitionKind::orthants:
      return make_orthants(n);
  }
  throw ConfigError("invalid partition kind");
}

}  // namespace dss
