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

#include <cmath>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "oracles/expectations.hpp"
#include "popgym/agents.hpp"
#include "popgym/envs/games.hpp"
#include "popgym/eval.hpp"
#include "unit/rollout.hpp"

namespace popgym {
namespace {

ConcentrationConfig eight_cards() {
  ConcentrationConfig c;
  c.num_ranks = 4;
  c.suits = {0, 1};
  c.rule = MatchRule::RankAndColor;
  c.max_steps = 32;
  return c;
}

TEST(ConcentrationTest, DifficultyDecks) {
  const auto easy = ConcentrationConfig::for_difficulty(Difficulty::Easy);
  const auto hard = ConcentrationConfig::for_difficulty(Difficulty::Hard);
  EXPECT_EQ(easy.num_cards(), 26);
  EXPECT_EQ(ConcentrationConfig::for_difficulty(Difficulty::Medium).num_cards(), 52);
  EXPECT_EQ(hard.num_cards(), 52);
  EXPECT_EQ(hard.rule, MatchRule::Rank);
  EXPECT_TRUE(cards_match({3, 0}, {3, 1}, MatchRule::RankAndColor));
  EXPECT_FALSE(cards_match({3, 0}, {3, 2}, MatchRule::RankAndColor));
  EXPECT_TRUE(cards_match({3, 0}, {3, 2}, MatchRule::Rank));
  EXPECT_FALSE(cards_match({3, 0}, {4, 0}, MatchRule::Rank));
}

TEST(ConcentrationTest, LayoutIsShuffledDeck) {
  ConcentrationEnv env(Difficulty::Medium);
  env.reset(EpisodeSeed(3));
  std::map<std::pair<int, int>, int> seen;
  for (const Card& c : env.layout()) ++seen[{c.rank, c.suit}];
  EXPECT_EQ(seen.size(), 52U);
}

TEST(ConcentrationTest, KnownLayoutClearsInPairsTurns) {
  for (Difficulty d : kAllDifficulties) {
    ConcentrationEnv env(d);
    env.reset(EpisodeSeed(8));
    const auto layout = env.layout();
    const MatchRule rule = env.config().rule;
    std::vector<bool> used(layout.size(), false);
    StepResult r;
    for (std::size_t i = 0; i < layout.size(); ++i) {
      if (used[i]) continue;
      for (std::size_t j = i + 1; j < layout.size(); ++j) {
        if (!used[j] && cards_match(layout[i], layout[j], rule)) {
          used[i] = used[j] = true;
          EXPECT_EQ(env.step(Action::discrete(static_cast<std::int64_t>(i))).reward, 0.0);
          r = env.step(Action::discrete(static_cast<std::int64_t>(j)));
          EXPECT_NEAR(r.reward, 1.0 / env.config().num_pairs(), 1e-15);
          break;
        }
      }
    }
    EXPECT_TRUE(r.terminated);
    EXPECT_EQ(env.episode_return(), 1.0);
    EXPECT_EQ(env.flips(), env.config().num_pairs());
  }
}

TEST(ConcentrationTest, WastedSelectionsArePenalised) {
  ConcentrationEnv env(Difficulty::Easy);
  env.reset(EpisodeSeed(0));
  const double penalty = -1.0 / env.config().max_steps;
  env.step(Action::discrete(0));
  EXPECT_EQ(env.pending_selection(), 0);
  StepResult r = env.step(Action::discrete(0));  // same card again
  EXPECT_DOUBLE_EQ(r.reward, penalty);
  EXPECT_FALSE(env.pending_selection().has_value());
  for (float v : std::span(r.obs).first(kNumRanks + kNumSuits)) EXPECT_EQ(v, 0.0F);
}

TEST(ConcentrationTest, MatchedCardsLeavePlayInPairs) {
  ConcentrationEnv env(Difficulty::Hard);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    testing::random_rollout(env, seed, seed * 3);
    int removed = 0;
    for (bool m : env.matched()) removed += m ? 1 : 0;
    EXPECT_EQ(removed, 2 * env.pairs_matched());
  }
}

TEST(ConcentrationTest, ExpectimaxReferenceValues) {
  // Two pairs: the first turn hits with 1/3; otherwise both pairs are half
  // known and take one turn each: 1/3 * 2 + 2/3 * 3 = 8/3.
  EXPECT_NEAR(testing::concentration_optimal_turns(2), 8.0 / 3.0, 1e-12);
  EXPECT_NEAR(testing::concentration_optimal_turns(4), 5.923809523809523, 1e-12);
}

TEST(ConcentrationTest, OracleMatchesOptimalTurnsOnEightCards) {
  ConcentrationEnv env(Difficulty::Easy, eight_cards());
  auto oracle = oracle_for(EnvKind::Concentration);
  constexpr int kEpisodes = 20000;
  double s = 0.0;
  double s2 = 0.0;
  for (int i = 0; i < kEpisodes; ++i) {
    const auto out = run_episode(env, *oracle, EpisodeSeed(static_cast<std::uint64_t>(i)));
    ASSERT_TRUE(out.terminated);
    ASSERT_EQ(out.info.at("pairs_matched"), 4.0);
    const double turns = out.info.at("flips");
    s += turns;
    s2 += turns * turns;
  }
  const double mean = s / kEpisodes;
  const double se = std::sqrt((s2 / kEpisodes - mean * mean) / (kEpisodes - 1));
  EXPECT_NEAR(mean, testing::concentration_optimal_turns(4), 3 * se);
}

TEST(ConcentrationTest, RandomPlayMatchesIndependentSimulation) {
  // Reference: uniform selections on a fresh 8-card table, simulated here
  // with the same wasted-selection rule.
  constexpr int kEpisodes = 10000;
  Pcg32 rng(99, 1);
  double ref = 0.0;
  for (int e = 0; e < kEpisodes; ++e) {
    std::vector<int> rank = {0, 0, 1, 1, 2, 2, 3, 3};
    rng.shuffle(std::span<int>(rank));
    std::vector<bool> gone(8, false);
    int pending = -1;
    int matches = 0;
    for (int t = 0; t < 32 && matches < 4; ++t) {
      const int c = static_cast<int>(rng.below(8));
      if (gone[static_cast<std::size_t>(c)] || c == pending) {
        pending = -1;
      } else if (pending < 0) {
        pending = c;
      } else {
        if (rank[static_cast<std::size_t>(c)] == rank[static_cast<std::size_t>(pending)]) {
          gone[static_cast<std::size_t>(c)] = gone[static_cast<std::size_t>(pending)] = true;
          ++matches;
        }
        pending = -1;
      }
    }
    ref += matches;
  }
  ConcentrationEnv env(Difficulty::Easy, eight_cards());
  double got = 0.0;
  double got2 = 0.0;
  for (int e = 0; e < kEpisodes; ++e) {
    testing::random_rollout(env, static_cast<std::uint64_t>(e), 31 + e);
    got += env.pairs_matched();
    got2 += env.pairs_matched() * env.pairs_matched();
  }
  const double m = got / kEpisodes;
  const double se = std::sqrt((got2 / kEpisodes - m * m) / kEpisodes);
  // Both estimates carry similar noise.
  EXPECT_NEAR(m, ref / kEpisodes, 3 * std::sqrt(2.0) * se);
}

}  // namespace
}  // namespace popgym
