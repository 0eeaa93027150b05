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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "popgym/envs/games.hpp"
#include "popgym/errors.hpp"

namespace popgym {

int BattleshipConfig::ship_cells() const {
  return std::accumulate(ship_lengths.begin(), ship_lengths.end(), 0);
}

BattleshipConfig BattleshipConfig::for_difficulty(Difficulty d) {
  BattleshipConfig c;
  c.rows = c.cols = by_difficulty(d, 8, 10, 12);
  c.ship_lengths = d == Difficulty::Easy ? std::vector<int>{4, 3, 3, 2}
                                         : std::vector<int>{5, 4, 3, 3, 2};
  c.max_steps = 2 * c.cells();
  return c;
}

BattleshipEnv::BattleshipEnv(Difficulty d, BattleshipConfig config)
    : Env(EnvKind::Battleship, d, SpaceDescriptor::box(1, 0.0, 1.0),
          SpaceDescriptor::discrete(config.cells()), config.max_steps),
      config_(std::move(config)) {
  if (config_.ship_lengths.empty() || config_.ship_cells() > config_.cells()) {
    throw InvalidConfig("Battleship fleet does not fit the board");
  }
  for (int len : config_.ship_lengths) {
    if (len < 1 || len > std::max(config_.rows, config_.cols)) {
      throw InvalidConfig("ship longer than the board");
    }
  }
  occupied_.resize(static_cast<std::size_t>(config_.cells()));
  fired_.resize(occupied_.size());
}

void BattleshipEnv::on_reset(EpisodeSeed seed) {
  Pcg32 level = rng_stream(seed, streams::kLevel);
  std::fill(occupied_.begin(), occupied_.end(), 0);
  std::fill(fired_.begin(), fired_.end(), 0);
  ships_.clear();

  const int rows = config_.rows;
  const int cols = config_.cols;
  const auto free_run = [&](const Ship& s) {
    for (int i = 0; i < s.length; ++i) {
      const int r = s.row + (s.horizontal ? 0 : i);
      const int c = s.col + (s.horizontal ? i : 0);
      if (occupied_[static_cast<std::size_t>(r * cols + c)]) return false;
    }
    return true;
  };

  std::vector<Ship> candidates;
  for (int len : config_.ship_lengths) {
    candidates.clear();
    for (int horizontal = 1; horizontal >= 0; --horizontal) {
      const int max_r = horizontal ? rows : rows - len + 1;
      const int max_c = horizontal ? cols - len + 1 : cols;
      for (int r = 0; r < max_r; ++r) {
        for (int c = 0; c < max_c; ++c) {
          const Ship s{r, c, len, horizontal == 1};
          if (free_run(s)) candidates.push_back(s);
        }
      }
    }
    if (candidates.empty()) throw InvalidConfig("no room left to place a ship");
    const Ship s = candidates[level.below(static_cast<std::uint32_t>(candidates.size()))];
    for (int i = 0; i < s.length; ++i) {
      const int r = s.row + (s.horizontal ? 0 : i);
      const int c = s.col + (s.horizontal ? i : 0);
      occupied_[static_cast<std::size_t>(r * cols + c)] = 1;
    }
    ships_.push_back(s);
  }

  ledger_.reset();
  hits_ = repeats_ = 0;
  last_hit_ = false;
}

Env::Transition BattleshipEnv::on_step(const Action& action) {
  const auto cell = static_cast<std::size_t>(action.index);
  last_hit_ = occupied_[cell] != 0;
  if (fired_[cell]) {
    ++repeats_;
  } else {
    fired_[cell] = 1;
    if (!last_hit_) return {0.0, false};
    ++hits_;
  }
  const std::int64_t total = config_.ship_cells();
  const std::int64_t budget = config_.max_steps;
  const double reward = ledger_.emit_fraction(hits_ * budget - repeats_ * total, total * budget);
  return {reward, hits_ == config_.ship_cells()};
}

void BattleshipEnv::write_features(std::span<float> out) const {
  out[0] = last_hit_ ? 1.0F : 0.0F;
}

void BattleshipEnv::write_episode_info(Info& info) const {
  info["hits"] = hits_;
  info["repeats"] = repeats_;
}

// Which cells have been fired on is latent and unobserved: 2^cells subsets.
double BattleshipEnv::log2_latent_states() const { return config_.cells(); }

}  // namespace popgym
