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

#include <optional>
#include <vector>

#include "popgym/env.hpp"
#include "popgym/envs/maze.hpp"
#include "popgym/reward.hpp"

namespace popgym {

enum class LabyrinthMode : std::uint8_t { Explore, Escape };

struct LabyrinthConfig {
  int width = 9;
  int height = 9;
  int max_steps = 128;
  // When set, every reset uses this maze instead of generating one.
  std::optional<Maze> fixed_maze;

  static LabyrinthConfig for_difficulty(Difficulty d) {
    const int side = by_difficulty(d, 9, 13, 17);
    return {side, side, by_difficulty(d, 128, 256, 512), std::nullopt};
  }
};

// Grid maze seen through a 3x3 window centred on the agent. Actions move
// N/E/S/W; a move into a wall wastes the step. Every step costs 1/max_steps.
//
// Explore pays 1/(free - 1) for each cell reached for the first time (the
// start cell counts as visited and pays nothing) and ends when every free
// cell has been visited. Escape pays 1 on reaching the exit and ends there.
//
// Observation: [3x3 window, 1 = wall, row-major from the north-west |
//               previous action one-hot(4)]
class LabyrinthEnv final : public Env {
 public:
  static constexpr std::size_t kWindowCells = 9;

  LabyrinthEnv(LabyrinthMode mode, Difficulty d)
      : LabyrinthEnv(mode, d, LabyrinthConfig::for_difficulty(d)) {}
  LabyrinthEnv(LabyrinthMode mode, Difficulty d, LabyrinthConfig config);

  LabyrinthMode mode() const { return mode_; }
  const LabyrinthConfig& config() const { return config_; }
  const Maze& maze() const { return maze_; }
  GridPos position() const { return pos_; }
  int visited_count() const { return visited_count_; }
  bool visited(GridPos p) const { return visited_[maze_.index(p)] != 0; }
  double coverage() const { return static_cast<double>(visited_count_) / num_free_; }

  double log2_latent_states() const override;

 private:
  void on_reset(EpisodeSeed seed) override;
  Transition on_step(const Action& action) override;
  void write_features(std::span<float> out) const override;
  void write_episode_info(Info& info) const override;

  LabyrinthMode mode_;
  LabyrinthConfig config_;
  Maze maze_;
  GridPos pos_;
  std::vector<std::uint8_t> visited_;
  RewardLedger ledger_;
  int num_free_ = 1;
  int visited_count_ = 0;
  bool escaped_ = false;
};

}  // namespace popgym
