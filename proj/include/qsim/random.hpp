// Copyright 2026 The groverlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace qsim {

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t &s) {
  s += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
} // namespace detail

/// Deterministic uniform random stream. The (seed, stream_index) pair fully
/// determines the sample sequence on every platform; independent trajectories
/// use the same seed with distinct stream indices.
class RandomStream {
public:
  RandomStream() : RandomStream(0, 0) {}
  RandomStream(std::uint64_t seed, std::uint64_t stream_index)
      : seed_(seed), stream_(stream_index) {
    std::uint64_t a = seed;
    std::uint64_t b = stream_index ^ 0x94D049BB133111EBull;
    state_ = detail::splitmix64(a) ^
             (detail::splitmix64(b) + 0x9E3779B97F4A7C15ull * (stream_index + 1));
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_; }

  std::uint64_t next_u64() { return detail::splitmix64(state_); }

  /// Uniform double in [0, 1), 53 significant bits.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t state_;
};

} // namespace qsim
