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

#include "dss/random.hpp"

#include <cmath>
#include <stdexcept>

namespace dss {

namespace {

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t stream_id) {
  std::seed_seq seq{
      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(stream_id),
      static_cast<std::uint32_t>(stream_id >> 32),
      // Domain tag so (seed, stream) never collides with a plain two-word seeding.
      0x64535321u};
  return std::mt19937_64{seq};
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_id)
    : seed_{seed}, stream_id_{stream_id}, engine_{make_engine(seed, stream_id)} {}

std::size_t RandomStream::uniform_index(std::size_t count) noexcept {
  const auto idx = static_cast<std::size_t>(uniform() * static_cast<double>(count));
  return idx < count ? idx : count - 1;
}

double RandomStream::normal() noexcept {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u = 0.0;
  double v = 0.0;
  double s = 0.0;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double factor = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * factor;
  has_spare_ = true;
  return u * factor;
}

Point sample_standard_normal(RandomStream& stream, std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("sample_standard_normal: dimension must be >= 1");
  }
  Point p(n);
  stream.fill_normal(p);
  return p;
}

}  // namespace dss
