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

#include "popgym/rng.hpp"

#include <cmath>
#include <numbers>

namespace popgym {

std::uint32_t Pcg32::below(std::uint32_t bound) {
  // Lemire, "Fast Random Integer Generation in an Interval" (2019).
  std::uint64_t m = static_cast<std::uint64_t>(next_u32()) * bound;
  auto low = static_cast<std::uint32_t>(m);
  if (low < bound) {
    const std::uint32_t threshold = (0U - bound) % bound;
    while (low < threshold) {
      m = static_cast<std::uint64_t>(next_u32()) * bound;
      low = static_cast<std::uint32_t>(m);
    }
  }
  return static_cast<std::uint32_t>(m >> 32U);
}

double Pcg32::normal() {
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Pcg32 rng_stream(EpisodeSeed seed, std::string_view stream_id) {
  const std::uint64_t key = fnv1a64(stream_id);
  const std::uint64_t state = splitmix64(seed.value ^ splitmix64(key));
  const std::uint64_t stream = splitmix64(key + 0x6A09E667F3BCC909ULL);
  return Pcg32(state, stream);
}

}  // namespace popgym
