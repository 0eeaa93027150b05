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
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace popgym {

enum class Difficulty : std::uint8_t { Easy, Medium, Hard };

inline constexpr Difficulty kAllDifficulties[] = {
    Difficulty::Easy, Difficulty::Medium, Difficulty::Hard};

std::string_view to_string(Difficulty d);
// Accepts "Easy"/"easy"/"e" and the other two levels likewise.
Difficulty parse_difficulty(std::string_view text);

// Picks one of three values by difficulty; keeps the per-env parameter
// tables total over the three levels.
template <typename T>
constexpr T by_difficulty(Difficulty d, T easy, T medium, T hard) {
  switch (d) {
    case Difficulty::Easy: return easy;
    case Difficulty::Medium: return medium;
    case Difficulty::Hard: return hard;
  }
  return hard;
}

// Seed fully determining the randomness of one episode.
struct EpisodeSeed {
  std::uint64_t value = 0;

  constexpr EpisodeSeed() = default;
  constexpr explicit EpisodeSeed(std::uint64_t v) : value(v) {}
  friend constexpr bool operator==(EpisodeSeed, EpisodeSeed) = default;
};

// Declared shape of an observation or action space.
//
// Discrete(n) and MultiDiscrete(ns) carry cardinalities; Box carries
// per-dimension bounds. Infinite Box bounds are allowed for unbounded
// velocities.
class SpaceDescriptor {
 public:
  enum class Kind : std::uint8_t { Discrete, MultiDiscrete, Box };

  static SpaceDescriptor discrete(std::int64_t n);
  static SpaceDescriptor multi_discrete(std::vector<std::int64_t> ns);
  static SpaceDescriptor box(std::vector<double> low, std::vector<double> high);
  static SpaceDescriptor box(std::size_t dims, double low, double high);

  Kind kind() const { return kind_; }
  // Cardinality of a Discrete space.
  std::int64_t n() const { return cardinalities_.front(); }
  const std::vector<std::int64_t>& cardinalities() const { return cardinalities_; }
  const std::vector<double>& low() const { return low_; }
  const std::vector<double>& high() const { return high_; }
  // Length of a flat vector encoding one element of the space.
  std::size_t flat_dim() const;
  bool contains(const std::vector<float>& values) const;

  std::string describe() const;

  friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;

 private:
  SpaceDescriptor() = default;

  Kind kind_ = Kind::Box;
  std::vector<std::int64_t> cardinalities_;
  std::vector<double> low_;
  std::vector<double> high_;
};

// A single action. Discrete spaces read `index`, Box spaces read `value`.
struct Action {
  std::int64_t index = 0;
  double value = 0.0;

  static constexpr Action discrete(std::int64_t i) { return Action{i, 0.0}; }
  static constexpr Action continuous(double v) { return Action{0, v}; }
  friend constexpr bool operator==(const Action&, const Action&) = default;
};

using Observation = std::vector<float>;
using Info = std::map<std::string, double>;

struct StepResult {
  Observation obs;
  double reward = 0.0;
  bool terminated = false;
  bool truncated = false;
  // Diagnostics only. Filled on the final transition of an episode.
  Info info;
};

}  // namespace popgym
