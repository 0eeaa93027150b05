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

#include "popgym/env.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "popgym/errors.hpp"
#include "popgym/reward.hpp"

namespace popgym {

namespace {

SpaceDescriptor make_observation_space(const SpaceDescriptor& features,
                                       const SpaceDescriptor& action) {
  std::vector<double> low = features.low();
  std::vector<double> high = features.high();
  if (action.kind() == SpaceDescriptor::Kind::Discrete) {
    low.insert(low.end(), static_cast<std::size_t>(action.n()), 0.0);
    high.insert(high.end(), static_cast<std::size_t>(action.n()), 1.0);
  } else {
    low.insert(low.end(), action.low().begin(), action.low().end());
    high.insert(high.end(), action.high().begin(), action.high().end());
  }
  return SpaceDescriptor::box(std::move(low), std::move(high));
}

}  // namespace

double RewardLedger::emit(double target) {
  target = std::clamp(target, -1.0, 1.0);
  double reward = target - total_;
  double next = total_ + reward;
  while (next > 1.0) {
    reward = std::nextafter(reward, -2.0);
    next = total_ + reward;
  }
  while (next < -1.0) {
    reward = std::nextafter(reward, 2.0);
    next = total_ + reward;
  }
  total_ = next;
  return reward;
}

Env::Env(EnvKind kind, Difficulty difficulty, SpaceDescriptor feature_space,
         SpaceDescriptor action_space, int max_steps)
    : kind_(kind),
      difficulty_(difficulty),
      obs_space_(make_observation_space(feature_space, action_space)),
      act_space_(std::move(action_space)),
      feature_dim_(feature_space.flat_dim()),
      max_steps_(max_steps) {
  if (feature_space.kind() != SpaceDescriptor::Kind::Box) {
    throw InvalidConfig("observation features must be a Box");
  }
  if (act_space_.kind() == SpaceDescriptor::Kind::MultiDiscrete ||
      (act_space_.kind() == SpaceDescriptor::Kind::Box && act_space_.flat_dim() != 1)) {
    throw InvalidConfig("actions must be Discrete or a one-dimensional Box");
  }
  if (max_steps_ < 1 || max_steps_ > kMaxEpisodeSteps) {
    throw InvalidConfig("episode cap must lie in [1, " + std::to_string(kMaxEpisodeSteps) + "]");
  }
}

std::string Env::id() const {
  return "popgym-" + std::string(name_of(kind_)) + "-" + std::string(to_string(difficulty_));
}

Observation Env::reset(EpisodeSeed seed) {
  Observation obs;
  reset(seed, obs);
  return obs;
}

void Env::reset(EpisodeSeed seed, Observation& obs) {
  t_ = 0;
  return_ = 0.0;
  active_ = true;
  prev_action_.reset();
  on_reset(seed);
  write_observation(obs);
}

StepResult Env::step(const Action& action) {
  StepResult out;
  step(action, out);
  return out;
}

void Env::step(const Action& action, StepResult& out) {
  if (!active_) throw EpisodeOver("step called on " + id() + " without an active episode");
  validate(action);

  const Transition tr = on_step(action);
  ++t_;
  prev_action_ = action;
  return_ += tr.reward;

  out.reward = tr.reward;
  out.terminated = tr.terminated;
  out.truncated = !tr.terminated && t_ >= max_steps_;
  out.info.clear();
  if (out.terminated || out.truncated) {
    active_ = false;
    write_episode_info(out.info);
    out.info["steps"] = t_;
    out.info["return"] = return_;
  }
  write_observation(out.obs);
}

void Env::validate(const Action& action) const {
  if (act_space_.kind() == SpaceDescriptor::Kind::Discrete) {
    if (action.index < 0 || action.index >= act_space_.n()) {
      throw ActionOutOfRange(id() + ": action " + std::to_string(action.index) +
                             " outside " + act_space_.describe());
    }
    return;
  }
  const double v = action.value;
  if (!std::isfinite(v) || v < act_space_.low()[0] || v > act_space_.high()[0]) {
    throw ActionOutOfRange(id() + ": action " + std::to_string(v) + " outside [" +
                           std::to_string(act_space_.low()[0]) + ", " +
                           std::to_string(act_space_.high()[0]) + "]");
  }
}

void Env::write_observation(Observation& obs) const {
  obs.resize(obs_space_.flat_dim());
  std::fill(obs.begin(), obs.end(), 0.0F);
  write_features(std::span<float>(obs.data(), feature_dim_));
  if (!prev_action_) return;
  if (act_space_.kind() == SpaceDescriptor::Kind::Discrete) {
    obs[feature_dim_ + static_cast<std::size_t>(prev_action_->index)] = 1.0F;
  } else {
    obs[feature_dim_] = static_cast<float>(prev_action_->value);
  }
}

}  // namespace popgym
