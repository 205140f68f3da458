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

#ifndef DSS_ERRORS_HPP
#define DSS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dss {

/// Invalid problem, partition, or run parameters. Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error{what} {}
};

/// No particle survived into the next intermediate region.
class ExtinctionError : public std::runtime_error {
 public:
  explicit ExtinctionError(const std::string& what) : std::runtime_error{what} {}
};

}  // namespace dss

#endif  // DSS_ERRORS_HPP
