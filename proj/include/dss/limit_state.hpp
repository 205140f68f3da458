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

#ifndef DSS_LIMIT_STATE_HPP
#define DSS_LIMIT_STATE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace dss {

/// Counts limit-state evaluations within one run.
class EvalCounter {
 public:
  void increment() noexcept { ++count_; }
  [[nodiscard]] std::uint64_t count() const noexcept { return count_; }

 private:
  std::uint64_t count_ = 0;
};

/**
 * A limit-state function g on R^n. Failure is the event g <= 0.
 *
 * The evaluator must be deterministic and free of side effects so that one
 * LimitState can be shared by concurrent runs.
 */
class LimitState {
 public:
  using Evaluator = std::function<double(std::span<const double>)>;

  LimitState(std::string name, std::size_t dimension, Evaluator evaluator);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return dimension_; }

  /// Evaluates g(p) and bumps `counter`. Throws ConfigError on dimension mismatch.
  double evaluate(std::span<const double> p, EvalCounter& counter) const;

  /// Evaluates without accounting; for diagnostics and tests.
  double operator()(std::span<const double> p) const;

 private:
  std::string name_;
  std::size_t dimension_;
  Evaluator evaluator_;
};

/// g = min(g1, g2), the two-mode series system with its global design point at (4, 0).
LimitState make_piecewise_linear();

/// g = 12 - |theta1 * theta2|, four symmetric design points.
LimitState make_beta_points();

/// g = value everywhere. Useful for degenerate checks (value < 0: always fails).
LimitState make_constant(std::string name, std::size_t dimension, double value);

/// The two pieces of the piecewise-linear problem, exposed for continuity checks.
namespace piecewise_linear {
double g1_upper(double theta1);  // 4 - theta1, used for theta1 > 3.5
double g1_lower(double theta1);  // 0.85 - 0.1 theta1, used for theta1 <= 3.5
double g2_upper(double theta2);  // 0.5 - 0.1 theta2, used for theta2 > 2
double g2_lower(double theta2);  // 2.3 - theta2, used for theta2 <= 2
}  // namespace piecewise_linear

/**
 * Name -> LimitState lookup. Preloaded with "piecewise_linear",
 * "beta_points", "always_fail" (g = -1) and "never_fail" (g = +1), both 2-D.
 */
class ProblemRegistry {
 public:
  ProblemRegistry();

  /// The process-wide registry used by the CLI.
  static ProblemRegistry& global();

  /// Adds or replaces a problem under ls.name().
  void add(LimitState ls);

  /// Throws ConfigError("unknown problem: ...") for unregistered names.
  [[nodiscard]] const LimitState& lookup(const std::string& name) const;

  [[nodiscard]] bool contains(const std::string& name) const;
  [[nodiscard]] std::vector<std::string> names() const;

 private:
  std::map<std::string, LimitState> problems_;
};

}  // namespace dss

#endif  // DSS_LIMIT_STATE_HPP
