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
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "popgym/types.hpp"

namespace popgym {

enum class EnvKind : std::uint8_t {
  RepeatFirst,
  RepeatPrevious,
  Autoencode,
  StatelessCartpole,
  StatelessPendulum,
  NoisyStatelessCartpole,
  NoisyStatelessPendulum,
  MultiarmedBandit,
  HigherLower,
  CountRecall,
  Concentration,
  Battleship,
  MineSweeper,
  LabyrinthExplore,
  LabyrinthEscape,
};

inline constexpr EnvKind kAllEnvKinds[] = {
    EnvKind::RepeatFirst,       EnvKind::RepeatPrevious,
    EnvKind::Autoencode,        EnvKind::StatelessCartpole,
    EnvKind::StatelessPendulum, EnvKind::NoisyStatelessCartpole,
    EnvKind::NoisyStatelessPendulum, EnvKind::MultiarmedBandit,
    EnvKind::HigherLower,       EnvKind::CountRecall,
    EnvKind::Concentration,     EnvKind::Battleship,
    EnvKind::MineSweeper,       EnvKind::LabyrinthExplore,
    EnvKind::LabyrinthEscape,
};

enum class EnvFamily : std::uint8_t { Diagnostic, Control, Game, Navigation };

std::string_view name_of(EnvKind kind);
std::optional<EnvKind> kind_from_name(std::string_view name);
EnvFamily family_of(EnvKind kind);
std::string_view to_string(EnvFamily family);

// Global ceiling on episode length. Individual envs may cap lower.
inline constexpr int kMaxEpisodeSteps = 1024;

// Base for every environment.
//
// Owns the episode lifecycle (active flag, step counter, truncation at the
// cap), validates actions against the declared space, and appends the
// previous-action encoding to every observation: one-hot for discrete
// actions, the raw value for continuous ones, zero-filled right after reset.
//
// Subclasses supply the transition rules and the env-specific leading part
// of the observation. An instance is single-threaded; distinct instances
// share no mutable state.
class Env {
 public:
  virtual ~Env() = default;
  Env(const Env&) = delete;
  Env& operator=(const Env&) = delete;

  EnvKind kind() const { return kind_; }
  Difficulty difficulty() const { return difficulty_; }
  std::string id() const;

  const SpaceDescriptor& observation_space() const { return obs_space_; }
  const SpaceDescriptor& action_space() const { return act_space_; }
  std::size_t feature_dim() const { return feature_dim_; }
  int max_steps() const { return max_steps_; }
  int elapsed_steps() const { return t_; }
  bool episode_active() const { return active_; }
  double episode_return() const { return return_; }

  Observation reset(EpisodeSeed seed);
  // Writes into `obs`, reusing its storage.
  void reset(EpisodeSeed seed, Observation& obs);

  StepResult step(const Action& action);
  // Writes into `out`, reusing its storage.
  void step(const Action& action, StepResult& out);

  // log2 of a lower bound on the number of distinct latent states reachable
  // under this configuration (+inf for continuous state).
  virtual double log2_latent_states() const = 0;

 protected:
  struct Transition {
    double reward = 0.0;
    bool terminated = false;
  };

  Env(EnvKind kind, Difficulty difficulty, SpaceDescriptor feature_space,
      SpaceDescriptor action_space, int max_steps);

  virtual void on_reset(EpisodeSeed seed) = 0;
  virtual Transition on_step(const Action& action) = 0;
  // `out` spans the feature block and arrives zero-filled.
  virtual void write_features(std::span<float> out) const = 0;
  virtual void write_episode_info(Info& /*info*/) const {}

 private:
  void validate(const Action& action) const;
  void write_observation(Observation& obs) const;

  EnvKind kind_;
  Difficulty difficulty_;
  SpaceDescriptor obs_space_;
  SpaceDescriptor act_space_;
  std::size_t feature_dim_ = 0;
  int max_steps_ = 0;

  int t_ = 0;
  bool active_ = false;
  double return_ = 0.0;
  std::optional<Action> prev_action_;
};

}  // namespace popgym
