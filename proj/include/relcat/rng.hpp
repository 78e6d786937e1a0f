/*  Copyright 2026 The relcat authors.

    Licensed under the Apache License, Version 2.0 (the "License");
    you may not use this file except in compliance with the License.
    You may obtain a copy of the License at

        https://www.apache.org/licenses/LICENSE-2.0

    Unless required by applicable law or agreed to in writing, software
    distributed under the License is distributed on an "AS IS" BASIS,
    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
    See the License for the specific language governing permissions and
    limitations under the License. */

#ifndef RELCAT_RNG_HPP_
#define RELCAT_RNG_HPP_

#include <cstdint>
#include <initializer_list>
#include <string_view>

namespace relcat {

/// Algorithm identifier stamped into every report that consumed
/// randomness, so results replicate across implementations.
inline constexpr std::string_view kRngAlgorithm = "splitmix64";

/// Sebastiano Vigna's splitmix64: a portable 64-bit generator whose
/// entire behaviour is pinned by these few lines. All randomized outputs
/// of the library derive from it, never from platform RNG facilities.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound), unbiased via rejection. bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform double in [0, 1), 53 significant bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  /// Deterministic sub-seed derivation: folds each value into the seed
  /// through one splitmix64 step. Used to give sweep trials independent
  /// streams so evaluation order never affects results.
  static std::uint64_t derive(std::uint64_t seed,
                              std::initializer_list<std::uint64_t> path) {
    std::uint64_t s = seed;
    for (std::uint64_t v : path) {
      SplitMix64 g(s ^ (v + 0x6A09E667F3BCC909ull));
      s = g.next();
    }
    return s;
  }

 private:
  std::uint64_t state_;
};

}  // namespace relcat

#endif  // RELCAT_RNG_HPP_
