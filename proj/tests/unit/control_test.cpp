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

#include "popgym/envs/control.hpp"
#include "unit/rollout.hpp"

namespace popgym {
namespace {

// Cart-pole dynamics written from the textbook form:
//   theta'' = (g sin - cos (F + m l w^2 sin) / M) / (l (4/3 - m cos^2 / M))
//   x''     = (F + m l (w^2 sin - theta'' cos)) / M
CartpoleState reference_cartpole(const CartpoleState& s, double f) {
  const double g = 9.8;
  const double m = 0.1;
  const double big_m = 1.1;
  const double l = 0.5;
  const double dt = 0.02;
  const double sn = std::sin(s.theta);
  const double cs = std::cos(s.theta);
  const double w2 = s.theta_dot * s.theta_dot;
  const double th_acc =
      (g * sn - cs * (f + m * l * w2 * sn) / big_m) / (l * (4.0 / 3.0 - m * cs * cs / big_m));
  const double x_acc = (f + m * l * (w2 * sn - th_acc * cs)) / big_m;
  return {s.x + dt * s.x_dot, s.x_dot + dt * x_acc, s.theta + dt * s.theta_dot,
          s.theta_dot + dt * th_acc};
}

TEST(CartpoleTest, EulerStepMatchesTextbookForm) {
  Pcg32 rng(8, 8);
  for (int i = 0; i < 1000; ++i) {
    const CartpoleState s{rng.uniform(-2, 2), rng.uniform(-3, 3), rng.uniform(-0.3, 0.3),
                          rng.uniform(-3, 3)};
    const double f = i % 2 ? 10.0 : -10.0;
    const CartpoleState a = cartpole_step(s, f);
    const CartpoleState b = reference_cartpole(s, f);
    EXPECT_NEAR(a.x, b.x, 1e-12);
    EXPECT_NEAR(a.x_dot, b.x_dot, 1e-12);
    EXPECT_NEAR(a.theta, b.theta, 1e-12);
    EXPECT_NEAR(a.theta_dot, b.theta_dot, 1e-12);
  }
}

TEST(CartpoleTest, BalancedEpisodeReturnsOne) {
  for (Difficulty d : kAllDifficulties) {
    for (bool noisy : {false, true}) {
      StatelessCartpoleEnv env(d, noisy);
      env.reset(EpisodeSeed(1));
      StepResult r;
      do {
        // Full-state feedback read from the white-box state.
        const CartpoleState& s = env.state();
        const double u = 0.1 * s.x + 0.5 * s.x_dot + 10.0 * s.theta + 2.0 * s.theta_dot;
        r = env.step(Action::discrete(u > 0 ? 1 : 0));
      } while (!r.terminated && !r.truncated);
      EXPECT_TRUE(r.truncated);
      EXPECT_EQ(env.episode_return(), 1.0);
      EXPECT_EQ(env.elapsed_steps(), env.config().max_steps);
    }
  }
}

TEST(CartpoleTest, FallingStepPaysNothingAndTerminates) {
  StatelessCartpoleEnv env(Difficulty::Easy, false);
  env.reset(EpisodeSeed(2));
  StepResult r;
  int survived = 0;
  while (true) {
    r = env.step(Action::discrete(1));
    if (r.terminated) break;
    ++survived;
    EXPECT_GT(r.reward, 0.0);
  }
  EXPECT_EQ(r.reward, 0.0);
  EXPECT_EQ(r.info.at("survived"), survived);
  EXPECT_DOUBLE_EQ(env.episode_return(), survived / 200.0);
}

TEST(CartpoleTest, ObservationsAreVelocitiesOnly) {
  StatelessCartpoleEnv env(Difficulty::Easy, false);
  const Observation obs = env.reset(EpisodeSeed(5));
  ASSERT_EQ(env.feature_dim(), 2U);
  EXPECT_EQ(obs[0], static_cast<float>(env.state().x_dot));
  EXPECT_EQ(obs[1], static_cast<float>(env.state().theta_dot));
}

TEST(CartpoleTest, NoiseHasConfiguredSpread) {
  for (Difficulty d : kAllDifficulties) {
    StatelessCartpoleEnv env(d, true);
    const double sigma = env.config().noise_sigma;
    double s = 0.0;
    double s2 = 0.0;
    long n = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      Observation obs = env.reset(EpisodeSeed(seed));
      Pcg32 rng(seed, 1);
      while (true) {
        for (int i = 0; i < 2; ++i) {
          const double truth = i == 0 ? env.state().x_dot : env.state().theta_dot;
          const double e = obs[static_cast<std::size_t>(i)] - truth;
          s += e;
          s2 += e * e;
          ++n;
        }
        const StepResult r = env.step(Action::discrete(rng.below(2)));
        if (r.terminated || r.truncated) break;
        obs = r.obs;
      }
    }
    const double mean = s / static_cast<double>(n);
    const double sd = std::sqrt(s2 / static_cast<double>(n) - mean * mean);
    EXPECT_NEAR(sd, sigma, 0.02 * sigma) << to_string(d);
    EXPECT_NEAR(mean, 0.0, 4 * sigma / std::sqrt(static_cast<double>(n)));
  }
}

TEST(CartpoleTest, NoisyMeanAtFirstStepMatchesNoiseless) {
  constexpr int kNoiseSeeds = 10000;
  StatelessCartpoleEnv clean(Difficulty::Medium, false);
  StatelessCartpoleEnv noisy(Difficulty::Medium, true);
  clean.reset(EpisodeSeed(42));
  const Observation target = clean.step(Action::discrete(1)).obs;
  double sum[2] = {0.0, 0.0};
  for (int j = 0; j < kNoiseSeeds; ++j) {
    noisy.reset(EpisodeSeed(42));
    noisy.reseed_noise(EpisodeSeed(static_cast<std::uint64_t>(j) + 1000));
    const Observation o = noisy.step(Action::discrete(1)).obs;
    sum[0] += o[0];
    sum[1] += o[1];
  }
  const double tol = 3 * noisy.config().noise_sigma / std::sqrt(double{kNoiseSeeds});
  EXPECT_NEAR(sum[0] / kNoiseSeeds, target[0], tol);
  EXPECT_NEAR(sum[1] / kNoiseSeeds, target[1], tol);
}

TEST(PendulumTest, StepFollowsSwingUpEquations) {
  const PendulumState s{0.3, -1.2};
  const PendulumState n = pendulum_step(s, 1.5);
  const double w = -1.2 + (15.0 * std::sin(0.3) + 3.0 * 1.5) * 0.05;
  EXPECT_DOUBLE_EQ(n.theta_dot, w);
  EXPECT_DOUBLE_EQ(n.theta, 0.3 + w * 0.05);
  EXPECT_EQ(pendulum_step({0.0, 7.99}, 2.0).theta_dot, 8.0);  // speed clamp
  EXPECT_NEAR(wrap_angle(3 * pendulum::kPi), pendulum::kPi, 1e-12);
  EXPECT_NEAR(wrap_angle(-0.5), -0.5, 1e-15);
}

TEST(PendulumTest, HeldUprightReturnsOne) {
  for (bool noisy : {false, true}) {
    StatelessPendulumEnv env(Difficulty::Hard, noisy);
    env.reset(EpisodeSeed(3));
    env.set_state({0.0, 0.0});
    StepResult r;
    do {
      r = env.step(Action::continuous(0.0));
    } while (!r.truncated);
    EXPECT_EQ(env.episode_return(), 1.0);
  }
}

TEST(PendulumTest, WorstCostEveryStepReturnsZero) {
  StatelessPendulumEnv env(Difficulty::Easy, false);
  env.reset(EpisodeSeed(3));
  StepResult r;
  do {
    env.set_state({pendulum::kPi, pendulum::kMaxSpeed});
    r = env.step(Action::continuous(1.0));
    EXPECT_EQ(r.reward, 0.0);
  } while (!r.truncated);
  EXPECT_EQ(env.episode_return(), 0.0);
}

TEST(PendulumTest, ObservationIsAngularVelocity) {
  StatelessPendulumEnv env(Difficulty::Easy, false);
  const Observation obs = env.reset(EpisodeSeed(9));
  ASSERT_EQ(env.feature_dim(), 1U);
  EXPECT_EQ(obs[0], static_cast<float>(env.state().theta_dot));
  EXPECT_EQ(env.observation_space().high()[0], pendulum::kMaxSpeed);
  StatelessPendulumEnv noisy(Difficulty::Easy, true);
  EXPECT_TRUE(std::isinf(noisy.observation_space().high()[0]));
}

TEST(PendulumTest, ReturnsStayInUnitInterval) {
  for (Difficulty d : kAllDifficulties) {
    StatelessPendulumEnv env(d, true);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto t = testing::random_rollout(env, seed, seed);
      double sum = 0.0;
      for (double x : t.rewards) {
        sum += x;
        ASSERT_GE(sum, 0.0);
        ASSERT_LE(sum, 1.0);
      }
    }
  }
}

}  // namespace
}  // namespace popgym
