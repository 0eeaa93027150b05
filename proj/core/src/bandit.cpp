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
#include <limits>
#include <numeric>

#include "popgym/envs/games.hpp"
#include "popgym/errors.hpp"

namespace popgym {

BanditEnv::BanditEnv(Difficulty d, BanditConfig config)
    : Env(EnvKind::MultiarmedBandit, d, SpaceDescriptor::box(1, 0.0, 1.0),
          SpaceDescriptor::discrete(config.arms), config.episode_length),
      config_(config) {
  probs_.resize(static_cast<std::size_t>(config_.arms));
}

void BanditEnv::on_reset(EpisodeSeed seed) {
  Pcg32 level = rng_stream(seed, streams::kLevel);
  payout_ = rng_stream(seed, streams::kPayout);
  for (double& p : probs_) p = level.uniform();
  ledger_.reset();
  wins_ = losses_ = 0;
  paid_ = false;
}

void BanditEnv::override_arm_probabilities(std::span<const double> probs) {
  if (probs.size() != probs_.size()) throw InvalidConfig("one probability per arm required");
  probs_.assign(probs.begin(), probs.end());
}

double BanditEnv::random_policy_expected_return() const {
  const double sum = std::accumulate(probs_.begin(), probs_.end(), 0.0,
                                     [](double acc, double p) { return acc + (2.0 * p - 1.0); });
  return sum / static_cast<double>(probs_.size());
}

Env::Transition BanditEnv::on_step(const Action& action) {
  const double p = probs_[static_cast<std::size_t>(action.index)];
  paid_ = payout_.uniform() < p;
  (paid_ ? wins_ : losses_) += 1;
  const double reward = ledger_.emit_fraction(wins_ - losses_, config_.episode_length);
  return {reward, elapsed_steps() + 1 >= config_.episode_length};
}

void BanditEnv::write_features(std::span<float> out) const { out[0] = paid_ ? 1.0F : 0.0F; }

// Payout probabilities are continuous and never shown.
double BanditEnv::log2_latent_states() const { return std::numeric_limits<double>::infinity(); }

}  // namespace popgym
