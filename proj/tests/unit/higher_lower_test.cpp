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

#include <gtest/gtest.h>

#include "oracles/expectations.hpp"
#include "popgym/agents.hpp"
#include "popgym/envs/games.hpp"
#include "popgym/eval.hpp"

namespace popgym {
namespace {

TEST(HigherLowerTest, ShoeHoldsFourCardsPerRankPerDeck) {
  for (Difficulty d : kAllDifficulties) {
    HigherLowerEnv env(d);
    env.reset(EpisodeSeed(6));
    std::vector<int> counts(kNumRanks, 0);
    for (auto r : env.shoe()) ++counts[r];
    for (int c : counts) EXPECT_EQ(c, 4 * env.config().decks);
    EXPECT_EQ(env.max_steps(), 52 * env.config().decks - 1);
  }
}

TEST(HigherLowerTest, HigherFromLowestRankNeverLoses) {
  HigherLowerEnv env(Difficulty::Hard);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Observation obs = env.reset(EpisodeSeed(seed));
    StepResult r;
    do {
      const bool lowest = obs[0] == 1.0F;
      r = env.step(Action::discrete(kGuessHigher));
      if (lowest) {
        EXPECT_TRUE(r.reward == 0.0 || r.reward > 0.0);
      }
      obs = r.obs;
    } while (!r.terminated);
  }
}

TEST(HigherLowerTest, EpisodeVisitsWholeShoe) {
  HigherLowerEnv env(Difficulty::Easy);
  Observation obs = env.reset(EpisodeSeed(1));
  for (int i = 0; i < 51; ++i) {
    EXPECT_EQ(obs[env.shoe()[static_cast<std::size_t>(i)]], 1.0F);
    const StepResult r = env.step(Action::discrete(kGuessLower));
    obs = r.obs;
    EXPECT_EQ(r.terminated, i == 50);
  }
}

TEST(MemorylessHigherLowerTest, MatchesExhaustiveEnumeration) {
  for (auto [ranks, copies] : {std::pair{4, 2}, std::pair{3, 3}, std::pair{5, 1}}) {
    const auto solved = solve_memoryless_higher_lower(ranks, copies);
    const auto [best_policy, best_value] = testing::best_memoryless_higher_lower(ranks, copies);
    std::vector<bool> solved_policy;
    for (auto g : solved.guess) solved_policy.push_back(g == kGuessHigher);
    EXPECT_NEAR(solved.expected_return, best_value, 1e-12) << ranks << "x" << copies;
    EXPECT_NEAR(testing::enumerate_memoryless_higher_lower(ranks, copies, solved_policy),
                best_value, 1e-12);
  }
}

TEST(MemorylessHigherLowerTest, SingleDeckClosedForm) {
  // sum_r 4 |12 - 2r| / (13 * 51) = 336 / 663.
  EXPECT_NEAR(solve_memoryless_higher_lower(13, 4).expected_return, 336.0 / 663.0, 1e-15);
}

TEST(MemorylessHigherLowerTest, AgentMatchesExpectation) {
  for (Difficulty d : kAllDifficulties) {
    const auto report = run_eval(EnvKind::HigherLower, d, "memoryless_dp", 10000, 0);
    const double expected =
        solve_memoryless_higher_lower(13, 4 * HigherLowerConfig::for_difficulty(d).decks)
            .expected_return;
    EXPECT_NEAR(report.mean_return, expected, 3 * report.std_error) << to_string(d);
  }
}

}  // namespace
}  // namespace popgym
