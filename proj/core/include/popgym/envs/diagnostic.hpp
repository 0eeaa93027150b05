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
#include <vector>

#include "popgym/env.hpp"
#include "popgym/reward.hpp"
#include "popgym/rng.hpp"

namespace popgym {

// Number of symbols shown by the diagnostic envs; also their action count.
inline constexpr int kDiagnosticSymbols = 4;

struct RepeatFirstConfig {
  int episode_length = 64;

  static RepeatFirstConfig for_difficulty(Difficulty d) {
    return {by_difficulty(d, 64, 128, 256)};
  }
};

// Shows one of four values with a remember flag at t=0, then fresh random
// values without the flag. Each action from t=1 on is scored against the
// first value: +-1/(T-1), so perfect recall returns exactly 1.
//
// Observation: [value one-hot(4) | remember flag | previous action one-hot(4)]
class RepeatFirstEnv final : public Env {
 public:
  static constexpr std::size_t kValueOffset = 0;
  static constexpr std::size_t kFlagOffset = 4;

  explicit RepeatFirstEnv(Difficulty d)
      : RepeatFirstEnv(d, RepeatFirstConfig::for_difficulty(d)) {}
  RepeatFirstEnv(Difficulty d, RepeatFirstConfig config);

  const RepeatFirstConfig& config() const { return config_; }
  int first_value() const { return first_; }

  double log2_latent_states() const override;

 private:
  void on_reset(EpisodeSeed seed) override;
  Transition on_step(const Action& action) override;
  void write_features(std::span<float> out) const override;

  RepeatFirstConfig config_;
  Pcg32 level_;
  RewardLedger ledger_;
  int first_ = 0;
  int current_ = 0;
  int correct_ = 0;
  int wrong_ = 0;
};

struct RepeatPreviousConfig {
  int episode_length = 64;
  int lag = 4;

  static RepeatPreviousConfig for_difficulty(Difficulty d) {
    return {by_difficulty(d, 64, 128, 256), by_difficulty(d, 4, 32, 64)};
  }
};

// Scores the action at time t against the value shown at t - k. Steps with
// t < k have no target and pay 0; the remaining T - k steps pay +-1/(T-k).
//
// Observation: [value one-hot(4) | previous action one-hot(4)]
class RepeatPreviousEnv final : public Env {
 public:
  explicit RepeatPreviousEnv(Difficulty d)
      : RepeatPreviousEnv(d, RepeatPreviousConfig::for_difficulty(d)) {}
  RepeatPreviousEnv(Difficulty d, RepeatPreviousConfig config);

  const RepeatPreviousConfig& config() const { return config_; }
  // Values remembered by the env, oldest first: exactly min(t + 1, k + 1)
  // entries counting the one on screen.
  std::vector<int> history() const;

  double log2_latent_states() const override;

 private:
  void on_reset(EpisodeSeed seed) override;
  Transition on_step(const Action& action) override;
  void write_features(std::span<float> out) const override;

  RepeatPreviousConfig config_;
  Pcg32 level_;
  RewardLedger ledger_;
  std::vector<std::uint8_t> ring_;  // k + 1 slots, indexed by time mod (k + 1)
  int shown_ = 0;
  int correct_ = 0;
  int wrong_ = 0;
};

enum class PlaybackOrder : std::uint8_t { Forward, Reverse };

struct AutoencodeConfig {
  int decks = 1;
  PlaybackOrder order = PlaybackOrder::Forward;

  int deck_length() const { return 52 * decks; }

  static AutoencodeConfig for_difficulty(Difficulty d) {
    return {by_difficulty(d, 1, 2, 3), PlaybackOrder::Forward};
  }
};

// Watch phase: a shuffled shoe of suits is shown one card per step with the
// watch flag set; actions are ignored and pay 0. Play phase: the flag is off
// and the agent must emit the watched suits in order (or reversed, per
// config), +-1/L per card.
//
// Observation: [suit one-hot(4) | watch flag | previous action one-hot(4)]
class AutoencodeEnv final : public Env {
 public:
  static constexpr std::size_t kSuitOffset = 0;
  static constexpr std::size_t kWatchOffset = 4;

  explicit AutoencodeEnv(Difficulty d)
      : AutoencodeEnv(d, AutoencodeConfig::for_difficulty(d)) {}
  AutoencodeEnv(Difficulty d, AutoencodeConfig config);

  const AutoencodeConfig& config() const { return config_; }
  const std::vector<std::uint8_t>& deck() const { return deck_; }
  bool watching() const { return elapsed_steps() < config_.deck_length(); }

  double log2_latent_states() const override;

 private:
  void on_reset(EpisodeSeed seed) override;
  Transition on_step(const Action& action) override;
  void write_features(std::span<float> out) const override;

  AutoencodeConfig config_;
  RewardLedger ledger_;
  std::vector<std::uint8_t> deck_;
  int correct_ = 0;
  int wrong_ = 0;
};

}  // namespace popgym
