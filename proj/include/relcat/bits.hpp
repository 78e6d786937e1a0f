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

#ifndef RELCAT_BITS_HPP_
#define RELCAT_BITS_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace relcat::detail {

inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t word_count(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

inline bool get_bit(std::span<const std::uint64_t> words, std::size_t i) {
  return (words[i / kWordBits] >> (i % kWordBits)) & 1u;
}

inline void set_bit(std::span<std::uint64_t> words, std::size_t i) {
  words[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

inline void clear_bit(std::span<std::uint64_t> words, std::size_t i) {
  words[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
}

inline std::size_t popcount(std::span<const std::uint64_t> words) {
  std::size_t n = 0;
  for (std::uint64_t w : words) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

/// First set bit position, scanning from bit 0.
inline std::optional<std::size_t> first_set(std::span<const std::uint64_t> words) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i] != 0) {
      return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words[i]));
    }
  }
  return std::nullopt;
}

inline bool subset_of(std::span<const std::uint64_t> a,
                      std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if ((a[i] & ~b[i]) != 0) return false;
  }
  return true;
}

inline bool equal(std::span<const std::uint64_t> a,
                  std::span<const std::uint64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return false;
  }
  return true;
}

inline void or_assign(std::span<std::uint64_t> dst,
                      std::span<const std::uint64_t> src) {
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] |= src[i];
}

inline void and_assign(std::span<std::uint64_t> dst,
                       std::span<const std::uint64_t> src) {
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] &= src[i];
}

}  // namespace relcat::detail

#endif  // RELCAT_BITS_HPP_
