// Copyright 2026 The popgym-cpp Authors
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
#include <span>
#include <string_view>
#include <utility>

#include "popgym/types.hpp"

namespace popgym {

// SplitMix64 finalizer. Used to decorrelate seeds and stream keys.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// 64-bit FNV-1a over the bytes of a label.
constexpr std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : text) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

// PCG-XSH-RR 64/32 (O'Neill). Output is frozen: the multiplier, increment
// rule, output permutation and the derived draws below never change, so
// trajectories stay reproducible across releases and platforms.
//
// Derived draws:
//   next_u64  = (next_u32 << 32) | next_u32
//   uniform   = (next_u64 >> 11) * 2^-53, in [0, 1)
//   below(n)  = Lemire multiply-shift with rejection, unbiased
//   normal    = Box-Muller cosine branch from two uniforms
class Pcg32 {
 public:
  using result_type = std::uint32_t;

  constexpr Pcg32() : Pcg32(0x853C49E6748FEA9BULL, 0xDA3E39CB94B95BDBULL) {}
  constexpr Pcg32(std::uint64_t init_state, std::uint64_t stream)
      : inc_((stream << 1U) | 1U) {
    next_u32();
    state_ += init_state;
    next_u32();
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return 0xFFFFFFFFU; }
  constexpr result_type operator()() { return next_u32(); }

  constexpr std::uint32_t next_u32() {
    const std::uint64_t old = state_;
    state_ = old * 6364136223846793005ULL + inc_;
    const auto xorshifted = static_cast<std::uint32_t>(((old >> 18U) ^ old) >> 27U);
    const auto rot = static_cast<std::uint32_t>(old >> 59U);
    return (xorshifted >> rot) | (xorshifted << ((-rot) & 31U));
  }

  constexpr std::uint64_t next_u64() {
    const std::uint64_t hi = next_u32();
    return (hi << 32U) | next_u32();
  }

  double uniform() { return static_cast<double>(next_u64() >> 11U) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, bound). bound must be nonzero.
  std::uint32_t below(std::uint32_t bound);

  // Standard normal deviate.
  double normal();

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = below(static_cast<std::uint32_t>(i));
      std::swap(items[i - 1], items[j]);
    }
  }

  friend constexpr bool operator==(const Pcg32&, const Pcg32&) = default;

 private:
  std::uint64_t state_ = 0;
  std::uint64_t inc_ = 0;
};

namespace streams {
inline constexpr std::string_view kLevel = "level";
inline constexpr std::string_view kNoise = "noise";
inline constexpr std::string_view kPayout = "payout";
inline constexpr std::string_view kAgent = "agent";
}  // namespace streams

// Named substream of an episode seed. Distinct labels give independent
// generators, so drawing more from one never shifts another.
Pcg32 rng_stream(EpisodeSeed seed, std::string_view stream_id);

}  // namespace popgym
