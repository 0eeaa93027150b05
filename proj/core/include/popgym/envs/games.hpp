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
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "popgym/env.hpp"
#include "popgym/reward.hpp"
#include "popgym/rng.hpp"

namespace popgym {

inline constexpr int kNumRanks = 13;
inline constexpr int kNumSuits = 4;

// ---------------------------------------------------------------------------
// Multiarmed Bandit

struct BanditConfig {
  int arms = 10;
  int episode_length = 100;

  static BanditConfig for_difficulty(Difficulty d) {
    return {by_difficulty(d, 10, 20, 30), by_difficulty(d, 100, 150, 200)};
  }
};

// Arm payout probabilities are redrawn uniformly on every reset. A pull pays
// +1/T with the arm's probability and -1/T otherwise.
//
// Observation: [paid-out bit of the previous pull | previous arm one-hot]
// The previous arm is the standard previous-action block.
class BanditEnv final : public Env {
 public:
  explicit BanditEnv(Difficulty d) : BanditEnv(d, BanditConfig::for_difficulty(d)) {}
  BanditEnv(Difficulty d, BanditConfig config);

  const BanditConfig& config() const { return config_; }
  const std::vector<double>& arm_probabilities() const { return probs_; }
  // White-box hook for tests; call after reset.
  void override_arm_probabilities(std::span<const double> probs);
  // Expected return of uniformly random pulls: mean_i (2 p_i - 1).
  double random_policy_expected_return() const;

  double log2_latent_states() const override;

 private:
  void on_reset(EpisodeSeed seed) override;
  Transition on_step(const Action& action) override;
  void write_features(std::span<float> out) const override;

  BanditConfig config_;
  std::vector<double> probs_;
  Pcg32 payout_;
  RewardLedger ledger_;
  int wins_ = 0;
  int losses_ = 0;
  bool paid_ = false;
};

// ---------------------------------------------------------------------------
// Higher Lower

struct HigherLowerConfig {
  int decks = 1;

  int shoe_size() const { return 52 * decks; }
  int comparisons() const { return shoe_size() - 1; }

  static HigherLowerConfig for_difficulty(Difficulty d) { return {by_difficulty(d, 1, 2, 3)}; }
};

enum HigherLowerAction : std::int64_t { kGuessHigher = 0, kGuessLower = 1 };

// A shuffled shoe of d decks is flipped one card at a time. Before each flip
// the agent guesses whether the next rank is higher or lower: +1/N if right,
// -1/N if wrong, 0 on a tie, N = 52 d - 1.
//
// Observation: [face-up rank one-hot(13) | previous action one-hot(2)]
class HigherLowerEnv final : public Env {
 public:
  explicit HigherLowerEnv(Difficulty d) : HigherLowerEnv(d, HigherLowerConfig::for_difficulty(d)) {}
  HigherLowerEnv(Difficulty d, HigherLowerConfig config);

  const HigherLowerConfig& config() const { return config_; }
  const std::vector<std::uint8_t>& shoe() const { return shoe_; }  // ranks in deal order
  int face_up_index() const { return cursor_; }

  double log2_latent_states() const override;

 private:
  void on_reset(EpisodeSeed seed) override;
  Transition on_step(const Action& action) override;
  void write_features(std::span<float> out) const override;

  HigherLowerConfig config_;
  std::vector<std::uint8_t> shoe_;
  RewardLedger ledger_;
  int cursor_ = 0;
  int correct_ = 0;
  int wrong_ = 0;
};

// ---------------------------------------------------------------------------
// Count Recall

struct CountRecallConfig {
  int num_values = 4;
  int episode_length = 128;

  static CountRecallConfig for_difficulty(Difficulty d) {
    return {4, by_difficulty(d, 128, 256, 512)};
  }
};

// Each step shows a next value and a query value; the agent answers how many
// times the query value has been shown so far, counting the one on screen.
// +1/L for the exact count, -1/L otherwise.
//
// Observation: [next one-hot(m) | query one-hot(m) | previous action one-hot(L+1)]
class CountRecallEnv final : public Env {
 public:
  explicit CountRecallEnv(Difficulty d) : CountRecallEnv(d, CountRecallConfig::for_difficulty(d)) {}
  CountRecallEnv(Difficulty d, CountRecallConfig config);

  const CountRecallConfig& config() const { return config_; }
  const std::vector<int>& counts() const { return counts_; }
  int next_value() const { return next_; }
  int query_value() const { return query_; }

  double log2_latent_states() const override;

 private:
  void on_reset(EpisodeSeed seed) override;
  Transition on_step(const Action& action) override;
  void write_features(std::span<float> out) const override;
  void draw();

  CountRecallConfig config_;
  Pcg32 level_;
  RewardLedger ledger_;
  std::vector<int> counts_;
  int next_ = 0;
  int query_ = 0;
  int correct_ = 0;
  int wrong_ = 0;
};

// ---------------------------------------------------------------------------
// Concentration

struct Card {
  std::uint8_t rank = 0;
  std::uint8_t suit = 0;  // 0, 1 red; 2, 3 black

  bool red() const { return suit < 2; }
  friend bool operator==(const Card&, const Card&) = default;
};

enum class MatchRule : std::uint8_t {
  RankAndColor,  // two red kings match; a red and a black king do not
  Rank,
};

struct ConcentrationConfig {
  int num_ranks = kNumRanks;
  std::vector<std::uint8_t> suits = {0, 1};
  MatchRule rule = MatchRule::RankAndColor;
  int max_steps = 104;

  int num_cards() const { return num_ranks * static_cast<int>(suits.size()); }
  int num_pairs() const { return num_cards() / 2; }

  static ConcentrationConfig for_difficulty(Difficulty d);
};

bool cards_match(const Card& a, const Card& b, MatchRule rule);

// Cards lie face down; selections come in pairs. The first selection of a
// pair flips a card, the second flips another and scores the pair:
// +1/num_pairs on a match (both cards leave play), -1/max_steps otherwise.
// Selecting a card already out of play, or the card already face up, is a
// wasted selection: -1/max_steps and the pending pair is abandoned.
// Penalised events never outnumber steps, so the penalty total stays >= -1.
//
// Observation: [rank one-hot(13) | suit one-hot(4) of the card just flipped |
//               previous action one-hot(num_cards)]
class ConcentrationEnv final : public Env {
 public:
  static constexpr std::size_t kRankOffset = 0;
  static constexpr std::size_t kSuitOffset = kNumRanks;

  explicit ConcentrationEnv(Difficulty d)
      : ConcentrationEnv(d, ConcentrationConfig::for_difficulty(d)) {}
  ConcentrationEnv(Difficulty d, ConcentrationConfig config);

  const ConcentrationConfig& config() const { return config_; }
  const std::vector<Card>& layout() const { return cards_; }
  const std::vector<bool>& matched() const { return matched_; }
  std::optional<int> pending_selection() const { return pending_; }
  int pairs_matched() const { return pairs_matched_; }
  int flips() const { return flips_; }

  double log2_latent_states() const override;

 private:
  void on_reset(EpisodeSeed seed) override;
  Transition on_step(const Action& action) override;
  void write_features(std::span<float> out) const override;
  void write_episode_info(Info& info) const override;

  ConcentrationConfig config_;
  std::vector<Card> cards_;
  std::vector<bool> matched_;
  RewardLedger ledger_;
  std::optional<int> pending_;
  std::optional<Card> shown_;
  int pairs_matched_ = 0;
  int penalties_ = 0;
  int flips_ = 0;
};

// ---------------------------------------------------------------------------
// Battleship

struct Ship {
  int row = 0;
  int col = 0;
  int length = 0;
  bool horizontal = true;
};

struct BattleshipConfig {
  int rows = 8;
  int cols = 8;
  std::vector<int> ship_lengths = {4, 3, 3, 2};
  int max_steps = 128;

  int cells() const { return rows * cols; }
  int ship_cells() const;

  static BattleshipConfig for_difficulty(Difficulty d);
};

// Ships are placed uniformly at random among non-overlapping axis-aligned
// placements, one at a time. The agent never sees the board: only whether
// its last shot hit, plus the shot position via the previous action.
// First hit on a ship cell +1/ship_cells, first shot on water 0, any repeat
// -1/max_steps.
//
// Observation: [hit bit | previous cell one-hot(rows*cols)]
class BattleshipEnv final : public Env {
 public:
  explicit BattleshipEnv(Difficulty d) : BattleshipEnv(d, BattleshipConfig::for_difficulty(d)) {}
  BattleshipEnv(Difficulty d, BattleshipConfig config);

  const BattleshipConfig& config() const { return config_; }
  const std::vector<Ship>& ships() const { return ships_; }
  const std::vector<std::uint8_t>& occupancy() const { return occupied_; }
  const std::vector<std::uint8_t>& fired() const { return fired_; }

  double log2_latent_states() const override;

 private:
  void on_reset(EpisodeSeed seed) override;
  Transition on_step(const Action& action) override;
  void write_features(std::span<float> out) const override;
  void write_episode_info(Info& info) const override;

  BattleshipConfig config_;
  std::vector<Ship> ships_;
  std::vector<std::uint8_t> occupied_;
  std::vector<std::uint8_t> fired_;
  RewardLedger ledger_;
  int hits_ = 0;
  int repeats_ = 0;
  bool last_hit_ = false;
};

// ---------------------------------------------------------------------------
// Mine Sweeper

struct MineSweeperConfig {
  int rows = 4;
  int cols = 4;
  int mines = 2;
  int max_steps = 32;

  int cells() const { return rows * cols; }
  int safe_cells() const { return cells() - mines; }

  static MineSweeperConfig for_difficulty(Difficulty d);
};

// Mines are a uniform random subset of cells. Clicking a mine ends the
// episode at -0.5; the first click on a safe cell pays +1/num_safe; a repeat
// click costs -0.5/max_steps. Repeats plus one mine cannot pass -1.
//
// Observation: [adjacent-mine count one-hot(9) of the last click |
//               previous cell one-hot(rows*cols)]
class MineSweeperEnv final : public Env {
 public:
  explicit MineSweeperEnv(Difficulty d)
      : MineSweeperEnv(d, MineSweeperConfig::for_difficulty(d)) {}
  MineSweeperEnv(Difficulty d, MineSweeperConfig config);

  const MineSweeperConfig& config() const { return config_; }
  const std::vector<std::uint8_t>& mines() const { return mine_; }
  const std::vector<std::uint8_t>& adjacency() const { return adjacent_; }
  const std::vector<std::uint8_t>& revealed() const { return revealed_; }

  double log2_latent_states() const override;

 private:
  void on_reset(EpisodeSeed seed) override;
  Transition on_step(const Action& action) override;
  void write_features(std::span<float> out) const override;
  void write_episode_info(Info& info) const override;

  MineSweeperConfig config_;
  std::vector<std::uint8_t> mine_;
  std::vector<std::uint8_t> adjacent_;
  std::vector<std::uint8_t> revealed_;
  std::vector<int> cell_order_;
  RewardLedger ledger_;
  int revealed_count_ = 0;
  int repeats_ = 0;
  bool hit_mine_ = false;
  int last_count_ = -1;
};

}  // namespace popgym
