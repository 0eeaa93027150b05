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

#include "popgym/envs/nav.hpp"
#include "popgym/errors.hpp"

namespace popgym {

LabyrinthEnv::LabyrinthEnv(LabyrinthMode mode, Difficulty d, LabyrinthConfig config)
    : Env(mode == LabyrinthMode::Explore ? EnvKind::LabyrinthExplore : EnvKind::LabyrinthEscape,
          d, SpaceDescriptor::box(kWindowCells, 0.0, 1.0), SpaceDescriptor::discrete(4),
          config.max_steps),
      mode_(mode),
      config_(std::move(config)) {
  if (config_.fixed_maze) {
    if (config_.fixed_maze->free_count() < 2 || !config_.fixed_maze->is_free(config_.fixed_maze->start)) {
      throw InvalidDimensions("fixed maze needs a free start and another free cell");
    }
  } else if (config_.width < 5 || config_.height < 5 || config_.width % 2 == 0 ||
             config_.height % 2 == 0) {
    throw InvalidDimensions("maze dimensions must be odd and >= 5");
  }
}

void LabyrinthEnv::on_reset(EpisodeSeed seed) {
  if (config_.fixed_maze) {
    maze_ = *config_.fixed_maze;
  } else {
    maze_ = generate_maze(config_.width, config_.height, seed);
  }
  num_free_ = maze_.free_count();
  visited_.assign(static_cast<std::size_t>(maze_.width()) * static_cast<std::size_t>(maze_.height()), 0);
  pos_ = maze_.start;
  visited_[maze_.index(pos_)] = 1;
  visited_count_ = 1;
  escaped_ = false;
  ledger_.reset();
}

Env::Transition LabyrinthEnv::on_step(const Action& action) {
  const auto m = static_cast<int>(action.index);
  const GridPos target{pos_.row + kMoveRow[m], pos_.col + kMoveCol[m]};
  if (maze_.is_free(target)) pos_ = target;

  auto& seen = visited_[maze_.index(pos_)];
  if (!seen) {
    seen = 1;
    ++visited_count_;
  }

  const std::int64_t steps = elapsed_steps() + 1;
  const std::int64_t budget = config_.max_steps;
  if (mode_ == LabyrinthMode::Explore) {
    // (visited - 1)/(free - 1) - steps/budget
    const std::int64_t fresh = visited_count_ - 1;
    const std::int64_t denom = num_free_ - 1;
    const double reward = ledger_.emit_fraction(fresh * budget - steps * denom, denom * budget);
    return {reward, visited_count_ == num_free_};
  }

  escaped_ = pos_ == maze_.exit;
  const double reward = ledger_.emit_fraction((escaped_ ? budget : 0) - steps, budget);
  return {reward, escaped_};
}

void LabyrinthEnv::write_features(std::span<float> out) const {
  std::size_t i = 0;
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      out[i++] = maze_.is_wall(pos_.row + dr, pos_.col + dc) ? 1.0F : 0.0F;
    }
  }
}

void LabyrinthEnv::write_episode_info(Info& info) const {
  info["coverage"] = coverage();
  if (mode_ == LabyrinthMode::Escape) info["escaped"] = escaped_ ? 1.0 : 0.0;
}

// Agent position times the visited set along any walk: at least one state per
// (free cell, visited-count) pair, against 2^8 window patterns.
double LabyrinthEnv::log2_latent_states() const {
  const double rooms = ((config_.width - 1) / 2.0) * ((config_.height - 1) / 2.0);
  const double free_cells = 2.0 * rooms - 1.0;
  return 2.0 * std::log2(free_cells);
}

}  // namespace popgym
