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

#ifndef DSS_CONFIG_HPP
#define DSS_CONFIG_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "dss/harness.hpp"

namespace dss {

/**
 * Parses a run configuration.
 *
 * Two spellings are accepted. The native one is a flat `key = value` file
 * with `#` comments:
 *
 *     problem    = piecewise_linear
 *     algorithm  = dss
 *     N          = 500
 *     level_prob = 0.2
 *     partition  = angular
 *     cuts       = -pi + 0.8, 0.8
 *
 * The other is a JSON object with the same keys, either at top level or
 * under "config" (which is what summary.json embeds), so a summary can be fed
 * back to reproduce its runs.
 *
 * Keys: problem, algorithm, N, level_prob (alias rho), mcmc_corr, partition,
 * cuts, axis, dimension, eps_tol, max_levels, runs, seed, pf_ref. Angles are
 * radians and may use `pi` with + - * /. Throws ConfigError on any problem.
 */
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Fully resolved config, doubles written with round-trip precision.
nlohmann::json config_to_json(const ExperimentConfig& cfg);

/// Evaluates an angle expression such as "-pi+0.8" or "3*pi/4".
double parse_angle(std::string_view expr);

}  // namespace dss

#endif  // DSS_CONFIG_HPP
