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

#ifndef DSS_RANDOM_HPP
#define DSS_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace dss {

/// A coordinate vector in standard-Gaussian space.
using Point = std::vector<double>;

/**
 * Deterministic source of uniform and standard-normal draws.
 *
 * The engine is a 64-bit Mersenne twister whose state is derived from
 * (seed, stream_id) through std::seed_seq, so every replication owns its own
 * reproducible sequence. Both the engine and seed_seq are fully specified by
 * the C++ standard. Gaussian draws use the Marsaglia polar method on 53-bit
 * uniforms; the spare variate of each pair is cached.
 *
 * Streams are values: copy one to fork an identical sequence. A stream must
 * never be shared between threads.
 */
class RandomStream {
 public:
  RandomStream(std::uint64_t seed, std::uint64_t stream_id);

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] std::uint64_t stream_id() const noexcept { return stream_id_; }

  /// Uniform draw in [0, 1).
  double uniform() noexcept {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, count). `count` must be positive.
  std::size_t uniform_index(std::size_t count) noexcept;

  double normal() noexcept;

  /// Overwrites `out` with i.i.d. N(0, 1) draws.
  void fill_normal(std::span<double> out) noexcept {
    for (auto& v : out) {
      v = normal();
    }
  }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// One draw from N(0, I_n). Throws std::invalid_argument when n == 0.
Point sample_standard_normal(RandomStream& stream, std::size_t n);

}  // namespace dss

#endif  // DSS_RANDOM_HPP
