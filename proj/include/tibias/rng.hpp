/*
 * Copyright 2026 The tibias-sim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TIBIAS_RNG_HPP
#define TIBIAS_RNG_HPP

#include <cstdint>
#include <string_view>

namespace tibias {

/// Deterministic random stream (splitmix64).
///
/// Each stochastic component of a run owns a named stream derived from
/// the scenario seed, so adding or removing one consumer never perturbs
/// the draws seen by the others. The generator and the uniform mappings
/// are fixed here rather than taken from <random> distributions, whose
/// output is implementation-defined; identical (seed, name) pairs yield
/// identical draw sequences on every platform.
class RngStream {
 public:
  RngStream(std::uint64_t scenario_seed, std::string_view name)
      : state_(mix(scenario_seed ^ fnv1a(name))) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// One Bernoulli(p) draw. Always consumes exactly one u64.
  bool bernoulli(double p) { return next_double() < p; }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

 private:
  static constexpr std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
      h ^= static_cast<unsigned char>(c);
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  static constexpr std::uint64_t mix(std::uint64_t x) {
    x = (x ^ (x >> 33)) * 0xff51afd7ed558ccdULL;
    x = (x ^ (x >> 33)) * 0xc4ceb9fe1a85ec53ULL;
    return x ^ (x >> 33);
  }

  std::uint64_t state_;
};

}  // namespace tibias

#endif  // TIBIAS_RNG_HPP
