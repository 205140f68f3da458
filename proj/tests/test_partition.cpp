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

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "dss/errors.hpp"
#include "dss/partition.hpp"
#include "dss/random.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

dss::Partition case1_sectors() { return dss::make_angular_sectors_2d({-kPi + 0.8, 0.8}); }
dss::Partition quadrants() { return dss::make_angular_sectors_2d({-kPi / 2, 0.0, kPi / 2, kPi}); }
dss::Partition eighths() {
  std::vector<double> cuts;
  for (int k = -3; k <= 4; ++k) {
    cuts.push_back(k * kPi / 4);
  }
  return dss::make_angular_sectors_2d(cuts);
}

dss::BinIndex classify(const dss::Partition& p, std::vector<double> x) { return p.classify(x); }

TEST(SingleBin, Examples) {
  const auto p = dss::make_single_bin(2);
  EXPECT_EQ(p.bin_count(), 1u);
  EXPECT_EQ(classify(p, {3.0, -2.0}), 0u);
  EXPECT_EQ(p.probabilities(), std::vector<double>{1.0});
}

TEST(AngularSectors, CaseOneHasTwoEqualBins) {
  const auto p = case1_sectors();
  ASSERT_EQ(p.bin_count(), 2u);
  EXPECT_NEAR(p.probability(0), 0.5, 1e-15);
  EXPECT_NEAR(p.probability(1), 0.5, 1e-15);
  EXPECT_EQ(classify(p, {5.0, 0.0}), 0u);   // dominant mode direction
  EXPECT_EQ(classify(p, {0.0, 5.0}), 1u);   // secondary mode direction
  EXPECT_EQ(classify(p, {-1.0, -2.0}), 0u);   // angle ~ -2.03 > -pi + 0.8
  EXPECT_EQ(classify(p, {-1.0, -0.1}), 1u);   // angle ~ -3.04, wraps into bin 1
}

TEST(AngularSectors, QuadrantsAndEighths) {
  const auto q = quadrants();
  ASSERT_EQ(q.bin_count(), 4u);
  for (double pr : q.probabilities()) {
    EXPECT_NEAR(pr, 0.25, 1e-15);
  }
  EXPECT_EQ(classify(q, {1.0, -1.0}), 0u);
  EXPECT_EQ(classify(q, {1.0, 1.0}), 1u);
  EXPECT_EQ(classify(q, {-1.0, 1.0}), 2u);
  EXPECT_EQ(classify(q, {-1.0, -1.0}), 3u);  // wrap-around sector [pi, 3pi/2)

  const auto e = eighths();
  ASSERT_EQ(e.bin_count(), 8u);
  for (double pr : e.probabilities()) {
    EXPECT_NEAR(pr, 0.125, 1e-15);
  }
}

TEST(AngularSectors, TieGoesToSectorStartingAtCut) {
  const auto q = quadrants();
  EXPECT_EQ(classify(q, {1.0, 0.0}), 1u);   // angle 0 starts sector 1
  EXPECT_EQ(classify(q, {0.0, 1.0}), 2u);   // angle pi/2
  EXPECT_EQ(classify(q, {-1.0, 0.0}), 3u);  // angle pi
  EXPECT_EQ(classify(q, {0.0, 0.0}), 1u);   // atan2(0, 0) = 0
}

TEST(AngularSectors, RejectsBadCuts) {
  EXPECT_THROW(dss::make_angular_sectors_2d({0.5}), dss::ConfigError);
  EXPECT_THROW(dss::make_angular_sectors_2d({0.5, 0.5}), dss::ConfigError);
  EXPECT_THROW(dss::make_angular_sectors_2d({1.0, 0.5}), dss::ConfigError);
  EXPECT_THROW(dss::make_angular_sectors_2d({-kPi, 0.5}), dss::ConfigError);
  EXPECT_THROW(dss::make_angular_sectors_2d({0.0, 4.0}), dss::ConfigError);
}

TEST(Halfspace, Examples) {
  const auto case2 = dss::make_halfspace(2, 2);
  EXPECT_EQ(classify(case2, {5.0, -1.0}), 0u);
  const auto case3 = dss::make_halfspace(1, 2);
  EXPECT_EQ(classify(case3, {-0.1, 9.0}), 0u);
  EXPECT_EQ(classify(case3, {0.0, 0.0}), 1u);
  EXPECT_EQ(case3.probabilities(), (std::vector<double>{0.5, 0.5}));
  EXPECT_THROW(dss::make_halfspace(0, 2), dss::ConfigError);
  EXPECT_THROW(dss::make_halfspace(3, 2), dss::ConfigError);
}

TEST(Orthants, Examples) {
  const auto p2 = dss::make_orthants(2);
  EXPECT_EQ(classify(p2, {1.0, 1.0}), 0u);
  EXPECT_EQ(classify(p2, {-1.0, 1.0}), 1u);
  EXPECT_EQ(classify(p2, {1.0, -1.0}), 2u);
  EXPECT_EQ(p2.probabilities(), (std::vector<double>(4, 0.25)));
  EXPECT_EQ(dss::make_orthants(3).bin_count(), 8u);
  EXPECT_EQ(dss::make_orthants(20).bin_count(), std::size_t{1} << 20);
  EXPECT_THROW(dss::make_orthants(31), dss::ConfigError);
}

TEST(MakePartition, FromSpec) {
  dss::PartitionSpec spec;
  spec.kind = dss::PartitionKind::halfspace;
  spec.axis = 2;
  EXPECT_EQ(dss::make_partition(spec, 2).axis(), 2u);
  spec.kind = dss::PartitionKind::angular;
  spec.cuts = {-kPi + 0.8, 0.8};
  EXPECT_EQ(dss::make_partition(spec, 2).bin_count(), 2u);
  EXPECT_THROW(dss::make_partition(spec, 3), dss::ConfigError);
  spec.kind = dss::PartitionKind::orthants;
  spec.dimension = 3;
  EXPECT_THROW(dss::make_partition(spec, 2), dss::ConfigError);
  EXPECT_EQ(dss::make_partition(spec, 3).bin_count(), 8u);
}

std::vector<dss::Partition> builtin_partitions() {
  return {dss::make_single_bin(2), case1_sectors(),          quadrants(),
          eighths(),               dss::make_halfspace(1, 2), dss::make_halfspace(2, 2),
          dss::make_orthants(2)};
}

TEST(PartitionProperties, ProbabilitiesSumToOne) {
  for (const auto& p : builtin_partitions()) {
    const auto& pr = p.probabilities();
    EXPECT_NEAR(std::accumulate(pr.begin(), pr.end(), 0.0), 1.0, 1e-12);
    for (double v : pr) {
      EXPECT_GT(v, 0.0);
    }
  }
  const auto o3 = dss::make_orthants(3).probabilities();
  EXPECT_NEAR(std::accumulate(o3.begin(), o3.end(), 0.0), 1.0, 1e-12);
}

TEST(PartitionProperties, EmpiricalBinFrequenciesMatch) {
  constexpr int kN = 100000;
  for (const auto& p : builtin_partitions()) {
    dss::RandomStream s{11, 0};
    std::vector<int> hits(p.bin_count(), 0);
    for (int i = 0; i < kN; ++i) {
      ++hits[p.classify(dss::sample_standard_normal(s, 2))];
    }
    for (std::size_t j = 0; j < p.bin_count(); ++j) {
      const double pj = p.probability(j);
      const double sigma = std::sqrt(pj * (1 - pj) / kN);
      EXPECT_LE(std::abs(static_cast<double>(hits[j]) / kN - pj), 4 * sigma)
          << to_string(p.kind()) << " bin " << j;
    }
  }
  const auto o3 = dss::make_orthants(3);
  dss::RandomStream s{12, 0};
  std::vector<int> hits(8, 0);
  for (int i = 0; i < kN; ++i) {
    ++hits[o3.classify(dss::sample_standard_normal(s, 3))];
  }
  for (int h : hits) {
    EXPECT_LT(std::abs(static_cast<double>(h) / kN - 0.125), 4 * std::sqrt(0.125 * 0.875 / kN));
  }
}

TEST(PartitionProperties, ConeStructure) {
  dss::RandomStream s{13, 0};
  for (const auto& p : builtin_partitions()) {
    for (int i = 0; i < 2000; ++i) {
      const auto x = dss::sample_standard_normal(s, 2);
      const double c = std::exp(3.0 * s.normal());
      const std::vector<double> y{c * x[0], c * x[1]};
      ASSERT_EQ(p.classify(x), p.classify(y));
    }
  }
}

}  // namespace
