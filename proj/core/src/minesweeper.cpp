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

namespace {
constexpr int kCountSymbols = 9;  // 0..8 adjacent mines
}

MineSweeperConfig MineSweeperConfig::for_difficulty(Difficulty d) {
  MineSweeperConfig c;
  c.rows = c.cols = by_difficulty(d, 4, 6, 8);
  c.mines = by_difficulty(d, 2, 6, 12);
  c.max_steps = 2 * c.cells();
  return c;
}

MineSweeperEnv::MineSweeperEnv(Difficulty d, MineSweeperConfig config)
    : Env(EnvKind::MineSweeper, d, SpaceDescriptor::box(kCountSymbols, 0.0, 1.0),
          SpaceDescriptor::discrete(config.cells()), config.max_steps),
      config_(config) {
  if (config_.mines < 1 || config_.mines >= config_.cells()) {
    throw InvalidConfig("MineSweeper needs between 1 and cells-1 mines");
  }
  const auto n = static_cast<std::size_t>(config_.cells());
  mine_.resize(n);
  adjacent_.resize(n);
  revealed_.resize(n);
  cell_order_.resize(n);
}

void MineSweeperEnv::on_reset(EpisodeSeed seed) {
  Pcg32 level = rng_stream(seed, streams::kLevel);
  const int n = config_.cells();
  std::iota(cell_order_.begin(), cell_order_.end(), 0);
  // Partial Fisher-Yates: the first `mines` slots are a uniform subset.
  for (int i = 0; i < config_.mines; ++i) {
    const int j = i + static_cast<int>(level.below(static_cast<std::uint32_t>(n - i)));
    std::swap(cell_order_[static_cast<std::size_t>(i)], cell_order_[static_cast<std::size_t>(j)]);
  }
  std::fill(mine_.begin(), mine_.end(), 0);
  for (int i = 0; i < config_.mines; ++i) mine_[static_cast<std::size_t>(cell_order_[static_cast<std::size_t>(i)])] = 1;

  for (int r = 0; r < config_.rows; ++r) {
    for (int c = 0; c < config_.cols; ++c) {
      int count = 0;
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          const int rr = r + dr;
          const int cc = c + dc;
          if ((dr || dc) && rr >= 0 && rr < config_.rows && cc >= 0 && cc < config_.cols) {
            count += mine_[static_cast<std::size_t>(rr * config_.cols + cc)];
          }
        }
      }
      adjacent_[static_cast<std::size_t>(r * config_.cols + c)] = static_cast<std::uint8_t>(count);
    }
  }

  std::fill(revealed_.begin(), revealed_.end(), 0);
  ledger_.reset();
  revealed_count_ = repeats_ = 0;
  hit_mine_ = false;
  last_count_ = -1;
}

Env::Transition MineSweeperEnv::on_step(const Action& action) {
  const auto cell = static_cast<std::size_t>(action.index);
  const std::int64_t safe = config_.safe_cells();
  const std::int64_t budget = config_.max_steps;
  const auto score = [&] {
    // revealed/safe - 0.5 [mine] - 0.5 repeats/budget, over 2 * safe * budget
    const std::int64_t num = 2 * revealed_count_ * budget - (hit_mine_ ? safe * budget : 0) -
                             repeats_ * safe;
    return ledger_.emit_fraction(num, 2 * safe * budget);
  };

  if (mine_[cell]) {
    hit_mine_ = true;
    last_count_ = -1;
    return {score(), true};
  }
  last_count_ = adjacent_[cell];
  if (revealed_[cell]) {
    ++repeats_;
    return {score(), false};
  }
  revealed_[cell] = 1;
  ++revealed_count_;
  return {score(), revealed_count_ == config_.safe_cells()};
}

void MineSweeperEnv::write_features(std::span<float> out) const {
  if (last_count_ >= 0) out[static_cast<std::size_t>(last_count_)] = 1.0F;
}

void MineSweeperEnv::write_episode_info(Info& info) const {
  info["safe_revealed"] = revealed_count_;
  info["mine_hit"] = hit_mine_ ? 1.0 : 0.0;
  info["repeats"] = repeats_;
}

// Mine layouts: C(cells, mines).
double MineSweeperEnv::log2_latent_states() const {
  const double n = config_.cells();
  const double k = config_.mines;
  return (std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)) / std::log(2.0);
}

}  // namespace popgym
