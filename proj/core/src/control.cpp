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

#include "popgym/envs/control.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "popgym/errors.hpp"

namespace popgym {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

CartpoleState cartpole_step(const CartpoleState& s, double force) {
  using namespace cartpole;
  const double cos_theta = std::cos(s.theta);
  const double sin_theta = std::sin(s.theta);
  const double temp =
      (force + kPoleMassLength * s.theta_dot * s.theta_dot * sin_theta) / kTotalMass;
  const double theta_acc =
      (kGravity * sin_theta - cos_theta * temp) /
      (kHalfPoleLength * (4.0 / 3.0 - kPoleMass * cos_theta * cos_theta / kTotalMass));
  const double x_acc = temp - kPoleMassLength * theta_acc * cos_theta / kTotalMass;

  CartpoleState next;
  next.x = s.x + kTau * s.x_dot;
  next.x_dot = s.x_dot + kTau * x_acc;
  next.theta = s.theta + kTau * s.theta_dot;
  next.theta_dot = s.theta_dot + kTau * theta_acc;
  return next;
}

double wrap_angle(double theta) {
  constexpr double two_pi = 2.0 * pendulum::kPi;
  double wrapped = std::fmod(theta + pendulum::kPi, two_pi);
  if (wrapped < 0.0) wrapped += two_pi;
  wrapped -= pendulum::kPi;
  return wrapped == -pendulum::kPi ? pendulum::kPi : wrapped;
}

double pendulum_cost(double theta, double theta_dot, double torque) {
  const double th = wrap_angle(theta);
  return th * th + 0.1 * theta_dot * theta_dot + 0.001 * torque * torque;
}

PendulumState pendulum_step(const PendulumState& s, double torque) {
  using namespace pendulum;
  const double u = std::clamp(torque, -kMaxTorque, kMaxTorque);
  double theta_dot = s.theta_dot + (3.0 * kGravity / (2.0 * kLength) * std::sin(s.theta) +
                                    3.0 / (kMass * kLength * kLength) * u) *
                                       kDt;
  theta_dot = std::clamp(theta_dot, -kMaxSpeed, kMaxSpeed);
  return {wrap_angle(s.theta + theta_dot * kDt), theta_dot};
}

ControlConfig cartpole_config(Difficulty d, bool noisy) {
  return {by_difficulty(d, 200, 400, 600), noisy ? by_difficulty(d, 0.1, 0.2, 0.3) : 0.0};
}

ControlConfig pendulum_config(Difficulty d, bool noisy) {
  return {by_difficulty(d, 100, 150, 200), noisy ? by_difficulty(d, 0.1, 0.2, 0.3) : 0.0};
}

// ---------------------------------------------------------------------------
// Stateless Cartpole

StatelessCartpoleEnv::StatelessCartpoleEnv(Difficulty d, bool noisy, ControlConfig config)
    : Env(noisy ? EnvKind::NoisyStatelessCartpole : EnvKind::StatelessCartpole, d,
          SpaceDescriptor::box(2, -kInf, kInf), SpaceDescriptor::discrete(2), config.max_steps),
      config_(config) {
  if (config_.noise_sigma < 0.0) throw InvalidConfig("noise sigma must be >= 0");
}

void StatelessCartpoleEnv::on_reset(EpisodeSeed seed) {
  Pcg32 level = rng_stream(seed, streams::kLevel);
  noise_ = rng_stream(seed, streams::kNoise);
  ledger_.reset();
  survived_ = 0;
  state_.x = level.uniform(-0.05, 0.05);
  state_.x_dot = level.uniform(-0.05, 0.05);
  state_.theta = level.uniform(-0.05, 0.05);
  state_.theta_dot = level.uniform(-0.05, 0.05);
  observe();
}

void StatelessCartpoleEnv::reseed_noise(EpisodeSeed noise_seed) {
  noise_ = rng_stream(noise_seed, streams::kNoise);
}

Env::Transition StatelessCartpoleEnv::on_step(const Action& action) {
  const double force = action.index == 1 ? cartpole::kForceMagnitude : -cartpole::kForceMagnitude;
  state_ = cartpole_step(state_, force);
  const bool failed = state_.failed();
  double reward = 0.0;
  if (!failed) {
    ++survived_;
    reward = ledger_.emit_fraction(survived_, config_.max_steps);
  }
  observe();
  return {reward, failed};
}

void StatelessCartpoleEnv::observe() {
  observed_[0] = state_.x_dot;
  observed_[1] = state_.theta_dot;
  if (config_.noise_sigma > 0.0) {
    observed_[0] += config_.noise_sigma * noise_.normal();
    observed_[1] += config_.noise_sigma * noise_.normal();
  }
}

void StatelessCartpoleEnv::write_features(std::span<float> out) const {
  out[0] = static_cast<float>(observed_[0]);
  out[1] = static_cast<float>(observed_[1]);
}

void StatelessCartpoleEnv::write_episode_info(Info& info) const {
  info["survived"] = survived_;
}

double StatelessCartpoleEnv::log2_latent_states() const {
  return std::numeric_limits<double>::infinity();
}

// ---------------------------------------------------------------------------
// Stateless Pendulum

StatelessPendulumEnv::StatelessPendulumEnv(Difficulty d, bool noisy, ControlConfig config)
    : Env(noisy ? EnvKind::NoisyStatelessPendulum : EnvKind::StatelessPendulum, d,
          config.noise_sigma > 0.0
              ? SpaceDescriptor::box(1, -kInf, kInf)
              : SpaceDescriptor::box(1, -pendulum::kMaxSpeed, pendulum::kMaxSpeed),
          SpaceDescriptor::box(1, -1.0, 1.0), config.max_steps),
      config_(config) {
  if (config_.noise_sigma < 0.0) throw InvalidConfig("noise sigma must be >= 0");
}

void StatelessPendulumEnv::on_reset(EpisodeSeed seed) {
  Pcg32 level = rng_stream(seed, streams::kLevel);
  noise_ = rng_stream(seed, streams::kNoise);
  ledger_.reset();
  score_ = 0.0;
  state_.theta = wrap_angle(level.uniform(-pendulum::kPi, pendulum::kPi));
  state_.theta_dot = level.uniform(-1.0, 1.0);
  observe();
}

void StatelessPendulumEnv::reseed_noise(EpisodeSeed noise_seed) {
  noise_ = rng_stream(noise_seed, streams::kNoise);
}

Env::Transition StatelessPendulumEnv::on_step(const Action& action) {
  const double torque = action.value * pendulum::kMaxTorque;
  const double cost = pendulum_cost(state_.theta, state_.theta_dot, torque);
  score_ += 1.0 - std::min(cost / pendulum::kMaxCost, 1.0);
  const double reward = ledger_.emit(std::min(score_ / config_.max_steps, 1.0));
  state_ = pendulum_step(state_, torque);
  observe();
  return {reward, false};
}

void StatelessPendulumEnv::observe() {
  observed_ = state_.theta_dot;
  if (config_.noise_sigma > 0.0) observed_ += config_.noise_sigma * noise_.normal();
}

void StatelessPendulumEnv::write_features(std::span<float> out) const {
  out[0] = static_cast<float>(observed_);
}

double StatelessPendulumEnv::log2_latent_states() const {
  return std::numeric_limits<double>::infinity();
}

}  // namespace popgym
