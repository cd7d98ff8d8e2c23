// Copyright 2026 The qvc Authors
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

#pragma once

// Seeded random numbers with a fixed, documented bit-level recipe.
//
// The engine is std::mt19937_64, whose output sequence is fully specified by
// the C++ standard. The standard <random> distributions are not (their output
// differs between library implementations), so every conversion from raw
// 64-bit words to numbers is done here by hand:
//
//   uniform01   : (word >> 11) * 2^-53                      -> [0, 1)
//   below(n)    : Lemire-free rejection on the top of 2^64   -> [0, n)
//   rademacher  : top bit of the word                        -> {-1, +1}
//
// Seeds for independent streams are derived with splitmix64 mixing.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace qvc {

/// One round of the splitmix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Combines a base seed with a sequence of stream identifiers.
constexpr std::uint64_t derive_seed(std::uint64_t base) noexcept { return splitmix64(base); }

template <typename... Rest>
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t next, Rest... rest) noexcept {
  return derive_seed(splitmix64(base) ^ next, static_cast<std::uint64_t>(rest)...);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Uniform integer in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) {
    // Reject the incomplete final block so every residue is equally likely.
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
    std::uint64_t word = engine_();
    while (word >= limit) word = engine_();
    return word % n;
  }

  /// +1 or -1 with equal probability.
  double rademacher() { return (engine_() >> 63) != 0 ? 1.0 : -1.0; }

  /// Standard normal via Box-Muller (one value per call; the pair partner is dropped).
  double normal() {
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qvc
