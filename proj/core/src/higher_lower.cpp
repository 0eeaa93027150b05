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

#include "popgym/envs/games.hpp"
#include "popgym/errors.hpp"

namespace popgym {

HigherLowerEnv::HigherLowerEnv(Difficulty d, HigherLowerConfig config)
    : Env(EnvKind::HigherLower, d, SpaceDescriptor::box(kNumRanks, 0.0, 1.0),
          SpaceDescriptor::discrete(2), config.comparisons()),
      config_(config) {
  if (config_.decks < 1) throw InvalidConfig("HigherLower needs at least one deck");
  shoe_.resize(static_cast<std::size_t>(config_.shoe_size()));
}

void HigherLowerEnv::on_reset(EpisodeSeed seed) {
  Pcg32 level = rng_stream(seed, streams::kLevel);
  for (std::size_t i = 0; i < shoe_.size(); ++i) {
    shoe_[i] = static_cast<std::uint8_t>(i % kNumRanks);
  }
  level.shuffle(std::span<std::uint8_t>(shoe_));
  ledger_.reset();
  cursor_ = 0;
  correct_ = wrong_ = 0;
}

Env::Transition HigherLowerEnv::on_step(const Action& action) {
  const int prev = shoe_[static_cast<std::size_t>(cursor_)];
  const int next = shoe_[static_cast<std::size_t>(++cursor_)];
  double reward = 0.0;
  if (next != prev) {
    const bool higher = next > prev;
    ((action.index == kGuessHigher) == higher ? correct_ : wrong_) += 1;
    reward = ledger_.emit_fraction(correct_ - wrong_, config_.comparisons());
  }
  return {reward, cursor_ >= config_.comparisons()};
}

void HigherLowerEnv::write_features(std::span<float> out) const {
  out[shoe_[static_cast<std::size_t>(cursor_)]] = 1.0F;
}

// Remaining-shoe rank counts: each rank has 4d + 1 possible counts.
double HigherLowerEnv::log2_latent_states() const {
  return kNumRanks * std::log2(4.0 * config_.decks + 1.0);
}

}  // namespace popgym
