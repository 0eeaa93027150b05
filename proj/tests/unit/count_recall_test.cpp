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
#include <vector>

#include <gtest/gtest.h>

#include "popgym/envs/games.hpp"

namespace popgym {
namespace {

int argmax(const Observation& o, std::size_t off, std::size_t n) {
  std::size_t best = off;
  for (std::size_t i = off; i < off + n; ++i) best = o[i] > o[best] ? i : best;
  return static_cast<int>(best - off);
}

TEST(CountRecallTest, CountIncludesValueOnScreen) {
  CountRecallEnv env(Difficulty::Easy);
  int checked_unseen = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Observation obs = env.reset(EpisodeSeed(seed));
    const int next = argmax(obs, 0, 4);
    const int query = argmax(obs, 4, 4);
    const int answer = query == next ? 1 : 0;
    EXPECT_EQ(env.step(Action::discrete(answer)).reward, 1.0 / 128);
    if (query != next) ++checked_unseen;
  }
  EXPECT_GT(checked_unseen, 0);
}

TEST(CountRecallTest, SpacesFollowEpisodeLength) {
  for (Difficulty d : kAllDifficulties) {
    CountRecallEnv env(d);
    const int len = env.config().episode_length;
    EXPECT_EQ(env.action_space().n(), len + 1);
    EXPECT_EQ(env.observation_space().flat_dim(), 8U + static_cast<std::size_t>(len + 1));
  }
}

TEST(CountRecallTest, AlwaysZeroMatchesSimulatedStreams) {
  // Reference: i.i.d. uniform next/query symbols simulated independently of
  // the env, answered with 0 every step.
  constexpr int kEpisodes = 10000;
  constexpr int kLen = 128;
  std::uint64_t lcg = 12345;
  const auto draw = [&lcg] {
    lcg = lcg * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<int>((lcg >> 33) % 4);
  };
  double ref = 0.0;
  double ref2 = 0.0;
  for (int e = 0; e < kEpisodes; ++e) {
    int counts[4] = {0, 0, 0, 0};
    int score = 0;
    for (int t = 0; t < kLen; ++t) {
      ++counts[draw()];
      score += counts[draw()] == 0 ? 1 : -1;
    }
    const double r = static_cast<double>(score) / kLen;
    ref += r;
    ref2 += r * r;
  }

  CountRecallEnv env(Difficulty::Easy);
  double got = 0.0;
  double got2 = 0.0;
  for (int e = 0; e < kEpisodes; ++e) {
    env.reset(EpisodeSeed(static_cast<std::uint64_t>(e)));
    StepResult r;
    do {
      r = env.step(Action::discrete(0));
    } while (!r.terminated);
    got += env.episode_return();
    got2 += env.episode_return() * env.episode_return();
  }
  const double m1 = ref / kEpisodes;
  const double m2 = got / kEpisodes;
  const double v1 = (ref2 / kEpisodes - m1 * m1) / kEpisodes;
  const double v2 = (got2 / kEpisodes - m2 * m2) / kEpisodes;
  EXPECT_LT(m2, -0.8);  // zero is right only while the queried value is unseen
  EXPECT_NEAR(m2, m1, 3 * std::sqrt(v1 + v2));
}

}  // namespace
}  // namespace popgym
