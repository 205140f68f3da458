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

#include "dss/limit_state.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "dss/errors.hpp"

namespace dss {

LimitState::LimitState(std::string name, std::size_t dimension, Evaluator evaluator)
    : name_{std::move(name)}, dimension_{dimension}, evaluator_{std::move(evaluator)} {
  if (dimension_ == 0) {
    throw ConfigError("limit state '" + name_ + "': dimension must be >= 1");
  }
  if (!evaluator_) {
    throw ConfigError("limit state '" + name_ + "': empty evaluator");
  }
}

double LimitState::evaluate(std::span<const double> p, EvalCounter& counter) const {
  const double g = (*this)(p);
  counter.increment();
  return g;
}

double LimitState::operator()(std::span<const double> p) const {
  if (p.size() != dimension_) {
    throw ConfigError("limit state '" + name_ + "': expected dimension " +
                      std::to_string(dimension_) + ", got " + std::to_string(p.size()));
  }
  return evaluator_(p);
}

namespace piecewise_linear {
double g1_upper(double theta1) { return 4.0 - theta1; }
double g1_lower(double theta1) { return 0.85 - 0.1 * theta1; }
double g2_upper(double theta2) { return 0.5 - 0.1 * theta2; }
double g2_lower(double theta2) { return 2.3 - theta2; }
}  // namespace piecewise_linear

LimitState make_piecewise_linear() {
  return LimitState{"piecewise_linear", 2, [](std::span<const double> x) {
                      using namespace piecewise_linear;
                      const double g1 = x[0] > 3.5 ? g1_upper(x[0]) : g1_lower(x[0]);
                      const double g2 = x[1] > 2.0 ? g2_upper(x[1]) : g2_lower(x[1]);
                      return std::min(g1, g2);
                    }};
}

LimitState make_beta_points() {
  return LimitState{"beta_points", 2, [](std::span<const double> x) {
                      return 12.0 - std::abs(x[0] * x[1]);
                    }};
}

LimitState make_constant(std::string name, std::size_t dimension, double value) {
  return LimitState{std::move(name), dimension,
                    [value](std::span<const double>) { return value; }};
}

ProblemRegistry::ProblemRegistry() {
  add(make_piecewise_linear());
  add(make_beta_points());
  add(make_constant("always_fail", 2, -1.0));
  add(make_constant("never_fail", 2, 1.0));
}

ProblemRegistry& ProblemRegistry::global() {
  static ProblemRegistry registry;
  return registry;
}

void ProblemRegistry::add(LimitState ls) {
  auto name = ls.name();
  problems_.insert_or_assign(std::move(name), std::move(ls));
}

const LimitState& ProblemRegistry::lookup(const std::string& name) const {
  const auto it = problems_.find(name);
  if (it == problems_.end()) {
    throw ConfigError("unknown problem: " + name);
  }
  return it->second;
}

bool ProblemRegistry::contains(const std::string& name) const {
  return problems_.contains(name);
}

std::vector<std::string> ProblemRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(problems_.size());
  for (const auto& [name, ls] : problems_) {
    out.push_back(name);
  }
  return out;
}

}  // namespace dss
