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

#include <cmath>
#include <stdexcept>

#include "dss/random.hpp"
#include "test_support.hpp"

namespace {

TEST(RandomStream, SameSeedAndStreamReproduce) {
  dss::RandomStream a{42, 7};
  dss::RandomStream b{42, 7};
  for (int i = 0; i < 1000; ++i) {
    ASSERT_EQ(a.normal(), b.normal());
  }
  dss::RandomStream c{42, 7};
  dss::RandomStream d{42, 7};
  EXPECT_EQ(dss::sample_standard_normal(c, 5), dss::sample_standard_normal(d, 5));
}

TEST(RandomStream, DistinctStreamsDiffer) {
  dss::RandomStream a{42, 0};
  dss::RandomStream b{42, 1};
  dss::RandomStream c{43, 0};
  int equal_ab = 0;
  int equal_ac = 0;
  for (int i = 0; i < 100; ++i) {
    const double x = a.uniform();
    equal_ab += x == b.uniform();
    equal_ac += x == c.uniform();
  }
  EXPECT_EQ(equal_ab, 0);
  EXPECT_EQ(equal_ac, 0);
}

TEST(RandomStream, DistinctStreamsAreUncorrelated) {
  // Sample correlation of paired draws; SE = 1/sqrt(n).
  constexpr int kN = 100000;
  dss::RandomStream a{5, 10};
  dss::RandomStream b{5, 11};
  double sxy = 0.0;
  for (int i = 0; i < kN; ++i) {
    sxy += a.normal() * b.normal();
  }
  EXPECT_LT(std::abs(sxy / kN), 4.0 / std::sqrt(kN));
}

TEST(RandomStream, UniformRange) {
  dss::RandomStream s{1, 0};
  for (int i = 0; i < 100000; ++i) {
    const double u = s.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    ASSERT_LT(s.uniform_index(3), 3u);
  }
}

TEST(SampleStandardNormal, MomentsWithinClt) {
  constexpr int kN = 1000000;
  dss::RandomStream s{2024, 0};
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < kN; ++i) {
    const double x = dss::sample_standard_normal(s, 1)[0];
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / kN;
  const double var = sum_sq / kN - mean * mean;
  // 3-sigma CLT bounds: sd(mean) = 1/sqrt(n), sd(var) = sqrt(2/n).
  EXPECT_LT(std::abs(mean), 3.0 / std::sqrt(kN));
  EXPECT_LT(std::abs(var - 1.0), 3.0 * std::sqrt(2.0 / kN));
}

TEST(SampleStandardNormal, PositiveQuadrantQuarter) {
  constexpr int kN = 1000000;
  dss::RandomStream s{99, 3};
  int hits = 0;
  for (int i = 0; i < kN; ++i) {
    const auto p = dss::sample_standard_normal(s, 2);
    hits += p[0] > 0.0 && p[1] > 0.0;
  }
  const double frac = static_cast<double>(hits) / kN;
  EXPECT_LT(std::abs(frac - 0.25), 3.0 * std::sqrt(0.25 * 0.75 / kN));
}

TEST(SampleStandardNormal, KolmogorovSmirnov) {
  constexpr std::size_t kN = 100000;
  dss::RandomStream s{7, 0};
  std::vector<double> xs(kN);
  for (auto& x : xs) {
    x = s.normal();
  }
  const double d = dss::testing::ks_statistic(xs, dss::testing::normal_cdf);
  EXPECT_LT(d, dss::testing::ks_critical(0.001, kN));
}

TEST(SampleStandardNormal, RejectsZeroDimension) {
  dss::RandomStream s{1, 1};
  EXPECT_THROW(dss::sample_standard_normal(s, 0), std::invalid_argument);
}

}  // namespace
