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

#include "popgym/env.hpp"
#include "popgym/reward.hpp"
#include "popgym/rng.hpp"

namespace popgym {

// Classic cart-pole constants (Barto, Sutton & Anderson 1983 as packaged
// by Gym). Frozen.
namespace cartpole {
inline constexpr double kGravity = 9.8;
inline constexpr double kCartMass = 1.0;
inline constexpr double kPoleMass = 0.1;
inline constexpr double kTotalMass = kCartMass + kPoleMass;
inline constexpr double kHalfPoleLength = 0.5;
inline constexpr double kPoleMassLength = kPoleMass * kHalfPoleLength;
inline constexpr double kForceMagnitude = 10.0;
inline constexpr double kTau = 0.02;
inline constexpr double kThetaThreshold = 12.0 * 2.0 * 3.14159265358979323846 / 360.0;
inline constexpr double kXThreshold = 2.4;
}  // namespace cartpole

struct CartpoleState {
  double x = 0.0;
  double x_dot = 0.0;
  double theta = 0.0;
  double theta_dot = 0.0;

  bool failed() const {
    return x < -cartpole::kXThreshold || x > cartpole::kXThreshold ||
           theta < -cartpole::kThetaThreshold || theta > cartpole::kThetaThreshold;
  }
};

// One explicit Euler step of the cart-pole equations under horizontal force.
CartpoleState cartpole_step(const CartpoleState& s, double force);

// Swing-up pendulum constants (Doya 2000 as packaged by Gym). Frozen.
namespace pendulum {
inline constexpr double kGravity = 10.0;
inline constexpr double kMass = 1.0;
inline constexpr double kLength = 1.0;
inline constexpr double kDt = 0.05;
inline constexpr double kMaxSpeed = 8.0;
inline constexpr double kMaxTorque = 2.0;
inline constexpr double kPi = 3.14159265358979323846;
// Quadratic cost at its largest: angle pi, speed 8, torque 2.
inline constexpr double kMaxCost =
    kPi * kPi + 0.1 * kMaxSpeed * kMaxSpeed + 0.001 * kMaxTorque * kMaxTorque;
}  // namespace pendulum

struct PendulumState {
  double theta = 0.0;      // wrapped to (-pi, pi], 0 is upright
  double theta_dot = 0.0;  // clamped to +-kMaxSpeed
};

double wrap_angle(double theta);
// theta^2 + 0.1 theta_dot^2 + 0.001 torque^2, theta wrapped first.
double pendulum_cost(double theta, double theta_dot, double torque);
// Semi-implicit Euler step; torque in newton-metres.
PendulumState pendulum_step(const PendulumState& s, double torque);

struct ControlConfig {
  int max_steps = 200;
  // Standard deviation of observation noise; 0 disables it.
  double noise_sigma = 0.0;
};

ControlConfig cartpole_config(Difficulty d, bool noisy);
ControlConfig pendulum_config(Difficulty d, bool noisy);

// Cart-pole with positions hidden: only the two velocities are observed.
// Pays 1/T_max per step the pole survives, so a full episode returns 1.
// Noise, when enabled, perturbs observations only and comes from the
// "noise" substream.
//
// Observation: [x_dot | theta_dot | previous action one-hot(2)]
class StatelessCartpoleEnv final : public Env {
 public:
  StatelessCartpoleEnv(Difficulty d, bool noisy)
      : StatelessCartpoleEnv(d, noisy, cartpole_config(d, noisy)) {}
  StatelessCartpoleEnv(Difficulty d, bool noisy, ControlConfig config);

  const ControlConfig& config() const { return config_; }
  const CartpoleState& state() const { return state_; }
  // White-box hooks for tests: overwrite the physics state, or swap the
  // noise substream for one keyed by another seed.
  void set_state(const CartpoleState& s) { state_ = s; }
  void reseed_noise(EpisodeSeed noise_seed);

  double log2_latent_states() const override;

 private:
  void on_reset(EpisodeSeed seed) override;
  Transition on_step(const Action& action) override;
  void write_features(std::span<float> out) const override;
  void write_episode_info(Info& info) const override;
  void observe();

  ControlConfig config_;
  CartpoleState state_;
  Pcg32 noise_;
  RewardLedger ledger_;
  int survived_ = 0;
  double observed_[2] = {0.0, 0.0};
};

// Swing-up pendulum with the angle hidden: only angular velocity is
// observed. Action Box(-1, 1) scales to +-2 N m. Each step pays
// (1 - cost / max_cost) / T_max, so every episode returns a value in [0, 1].
//
// Observation: [theta_dot | previous action]
class StatelessPendulumEnv final : public Env {
 public:
  StatelessPendulumEnv(Difficulty d, bool noisy)
      : StatelessPendulumEnv(d, noisy, pendulum_config(d, noisy)) {}
  StatelessPendulumEnv(Difficulty d, bool noisy, ControlConfig config);

  const ControlConfig& config() const { return config_; }
  const PendulumState& state() const { return state_; }
  void set_state(const PendulumState& s) { state_ = s; }
  void reseed_noise(EpisodeSeed noise_seed);

  double log2_latent_states() const override;

 private:
  void on_reset(EpisodeSeed seed) override;
  Transition on_step(const Action& action) override;
  void write_features(std::span<float> out) const override;
  void observe();

  ControlConfig config_;
  PendulumState state_;
  Pcg32 noise_;
  RewardLedger ledger_;
  double score_ = 0.0;
  double observed_ = 0.0;
};

}  // namespace popgym
