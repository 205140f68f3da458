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

#ifndef DSS_PARTITION_HPP
#define DSS_PARTITION_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace dss {

/// Zero-based bin index. Reports and files label bins 1..J.
using BinIndex = std::size_t;

enum class PartitionKind { single, angular, halfspace, orthants };

std::string to_string(PartitionKind kind);
/// Throws ConfigError for unrecognised names.
PartitionKind partition_kind_from_string(const std::string& name);

/**
 * A partition of R^n into cones ("bins") with analytically known Gaussian
 * probabilities.
 *
 * Points lying exactly on a cut go to the bin on the >= side: halfspace and
 * orthant bins treat 0 as positive, and angular sectors are half-open
 * [cut_k, cut_{k+1}) with the last sector wrapping around through pi.
 */
class Partition {
 public:
  [[nodiscard]] PartitionKind kind() const noexcept { return kind_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }
  [[nodiscard]] std::size_t bin_count() const noexcept { return probs_.size(); }
  [[nodiscard]] const std::vector<double>& probabilities() const noexcept { return probs_; }
  [[nodiscard]] double probability(BinIndex j) const { return probs_.at(j); }

  /// Sector start angles for angular partitions; empty otherwise.
  [[nodiscard]] const std::vector<double>& cuts() const noexcept { return cuts_; }
  /// One-based axis for halfspace partitions; 0 otherwise.
  [[nodiscard]] std::size_t axis() const noexcept { return axis_; }

  [[nodiscard]] BinIndex classify(std::span<const double> p) const;

  friend Partition make_single_bin(std::size_t n);
  friend Partition make_angular_sectors_2d(std::vector<double> cuts);
  friend Partition make_halfspace(std::size_t axis, std::size_t n);
  friend Partition make_orthants(std::size_t n);

 private:
  Partition(PartitionKind kind, std::size_t dimension, std::vector<double> probs);

  PartitionKind kind_;
  std::size_t dimension_;
  std::vector<double> probs_;
  std::vector<double> cuts_;
  std::size_t axis_ = 0;
};

/// The whole space as one bin; dSS on it is plain subset simulation.
Partition make_single_bin(std::size_t n);

/// Angular sectors of the plane between consecutive cuts (radians in (-pi, pi],
/// strictly increasing, at least two). Bin k starts at cuts[k].
Partition make_angular_sectors_2d(std::vector<double> cuts);

/// Bin 0 = {theta_axis < 0}, bin 1 = {theta_axis >= 0}. `axis` is one-based.
Partition make_halfspace(std::size_t axis, std::size_t n);

/// 2^n sign orthants. Bit i of the bin index is set when theta_i < 0.
Partition make_orthants(std::size_t n);

/// Declarative description of a partition, as found in run configurations.
struct PartitionSpec {
  PartitionKind kind = PartitionKind::single;
  std::vector<double> cuts;  // angular
  std::size_t axis = 0;      // halfspace, one-based
  std::size_t dimension = 0; // optional cross-check against the problem; 0 = unchecked
};

/// Builds the partition described by `spec` for an n-dimensional problem.
Partition make_partition(const PartitionSpec& spec, std::size_t n);

}  // namespace dss

#endif  // DSS_PARTITION_HPP
