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

#include <array>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "popgym/env.hpp"
#include "popgym/types.hpp"

namespace popgym {

// Scripted policy. Agents decide from observations alone; begin_episode hands
// over the env so an agent can read its public configuration (spaces, deck
// counts, lags). The single exception is the mine-sweeper safe-click oracle
// and the mine-sweeper adversary, which are white-box and read the board.
class Agent {
 public:
  virtual ~Agent() = default;
  virtual std::string_view name() const = 0;
  // Called right after env.reset(seed); clears per-episode memory.
  virtual void begin_episode(const Env& env, EpisodeSeed seed) = 0;
  virtual Action act(std::span<const float> obs) = 0;
};

// Names understood by make_agent.
inline constexpr std::string_view kAgentNames[] = {
    "random", "constant", "adversarial", "oracle", "wall_follower", "card_counter",
    "memoryless_dp"};

// Uniform over the action space, from the episode's "agent" substream.
std::unique_ptr<Agent> random_agent();
// Always action 0 (or 0.0 for continuous actions).
std::unique_ptr<Agent> constant_agent();
// Penalty-maximising script for `kind`; used to probe the reward floor.
std::unique_ptr<Agent> adversarial_agent(EnvKind kind);
// Hand-crafted strategy for the envs with a known optimum. Throws
// UnsupportedEnv elsewhere (bandits, control, labyrinths, higher-lower).
std::unique_ptr<Agent> oracle_for(EnvKind kind);
// Left-hand rule over the 3x3 window; remembers only its heading.
std::unique_ptr<Agent> wall_follower();
// Higher Lower: tracks the remaining shoe and guesses toward the larger mass.
std::unique_ptr<Agent> card_counter();
// Higher Lower: best policy that sees only the face-up rank.
std::unique_ptr<Agent> memoryless_dp();

// Throws UnknownAgent for names outside kAgentNames, UnsupportedEnv when the
// agent has no meaning on `kind`.
std::unique_ptr<Agent> make_agent(std::string_view name, EnvKind kind);

// Memoryless Higher Lower policy for a shoe of `num_ranks` ranks with
// `copies` cards each, and its exact expected return.
//
// In a uniformly shuffled shoe every adjacent (face-up, next) pair is a
// uniform ordered pair of distinct cards, so the next rank given only the
// face-up rank r has P(r') = (copies - [r' == r]) / (n - 1) at every position.
// The policy guesses toward the larger side; its per-comparison expectation
// is the same at every position, so the episode return equals it.
struct MemorylessHigherLower {
  std::vector<std::int64_t> guess;  // per face-up rank: kGuessHigher / kGuessLower
  double expected_return = 0.0;
};
MemorylessHigherLower solve_memoryless_higher_lower(int num_ranks, int copies);

}  // namespace popgym
