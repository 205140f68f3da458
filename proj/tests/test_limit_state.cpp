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
#include <atomic>
#include <cmath>

#include "dss/errors.hpp"
#include "dss/limit_state.hpp"
#include "dss/random.hpp"

namespace {

double eval(const dss::LimitState& ls, std::array<double, 2> p) { return ls(p); }

TEST(PiecewiseLinear, Examples) {
  const auto ls = dss::make_piecewise_linear();
  EXPECT_EQ(ls.dimension(), 2u);
  EXPECT_DOUBLE_EQ(eval(ls, {4.0, 0.0}), 0.0);  // global design point
  EXPECT_DOUBLE_EQ(eval(ls, {0.0, 0.0}), 0.85);
  EXPECT_DOUBLE_EQ(eval(ls, {3.5, 0.0}), 0.5);
  EXPECT_DOUBLE_EQ(eval(ls, {0.0, 5.0}), 0.0);
  EXPECT_DOUBLE_EQ(eval(ls, {6.0, 0.0}), -2.0);
}

TEST(PiecewiseLinear, PiecesAgreeAtBreakpoints) {
  namespace pl = dss::piecewise_linear;
  EXPECT_NEAR(pl::g1_upper(3.5), 0.5, 1e-12);
  EXPECT_NEAR(pl::g1_lower(3.5), 0.5, 1e-12);
  EXPECT_NEAR(pl::g2_upper(2.0), 0.3, 1e-12);
  EXPECT_NEAR(pl::g2_lower(2.0), 0.3, 1e-12);
}

TEST(BetaPoints, Examples) {
  const auto ls = dss::make_beta_points();
  EXPECT_DOUBLE_EQ(eval(ls, {0.0, 0.0}), 12.0);
  EXPECT_DOUBLE_EQ(eval(ls, {4.0, 3.0}), 0.0);
  EXPECT_DOUBLE_EQ(eval(ls, {-4.0, -3.0}), 0.0);
  EXPECT_DOUBLE_EQ(eval(ls, {1.0, 1.0}), 11.0);
}

TEST(BetaPoints, SymmetricUnderSignFlips) {
  const auto ls = dss::make_beta_points();
  dss::RandomStream s{3, 0};
  for (int i = 0; i < 1000; ++i) {
    const double a = 4.0 * s.normal();
    const double b = 4.0 * s.normal();
    const double g = eval(ls, {a, b});
    ASSERT_EQ(g, eval(ls, {-a, b}));
    ASSERT_EQ(g, eval(ls, {a, -b}));
    ASSERT_EQ(g, eval(ls, {-a, -b}));
  }
}

TEST(LimitState, CounterTracksEvaluations) {
  std::atomic<int> calls{0};
  const dss::LimitState ls{"counting", 3, [&calls](std::span<const double> x) {
                             ++calls;
                             return x[0];
                           }};
  dss::EvalCounter ctr;
  const std::array<double, 3> p{1.0, 2.0, 3.0};
  for (int i = 0; i < 17; ++i) {
    EXPECT_EQ(ls.evaluate(p, ctr), 1.0);
  }
  EXPECT_EQ(ctr.count(), 17u);
  EXPECT_EQ(calls.load(), 17);
}

TEST(LimitState, DimensionMismatchIsConfigError) {
  const auto ls = dss::make_beta_points();
  dss::EvalCounter ctr;
  const std::array<double, 3> p{1.0, 2.0, 3.0};
  EXPECT_THROW(ls.evaluate(p, ctr), dss::ConfigError);
  EXPECT_EQ(ctr.count(), 0u);
}

TEST(ProblemRegistry, LooksUpBuiltins) {
  const dss::ProblemRegistry reg;
  EXPECT_EQ(reg.lookup("piecewise_linear").name(), "piecewise_linear");
  EXPECT_EQ(reg.lookup("beta_points").name(), "beta_points");
  EXPECT_DOUBLE_EQ(eval(reg.lookup("piecewise_linear"), {4.0, 0.0}), 0.0);
  EXPECT_LT(eval(reg.lookup("always_fail"), {0.0, 0.0}), 0.0);
  EXPECT_GT(eval(reg.lookup("never_fail"), {0.0, 0.0}), 0.0);
}

TEST(ProblemRegistry, UnknownNameIsConfigError) {
  const dss::ProblemRegistry reg;
  try {
    (void)reg.lookup("nonexistent");
    FAIL() << "expected ConfigError";
  } catch (const dss::ConfigError& e) {
    EXPECT_NE(std::string{e.what()}.find("unknown problem"), std::string::npos);
  }
}

TEST(ProblemRegistry, AcceptsUserProblems) {
  dss::ProblemRegistry reg;
  reg.add(dss::LimitState{"plane", 2, [](std::span<const double> x) { return 3.0 - x[0]; }});
  EXPECT_TRUE(reg.contains("plane"));
  EXPECT_DOUBLE_EQ(eval(reg.lookup("plane"), {1.0, 0.0}), 2.0);
}

}  // namespace
