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

#include "popgym/envs/diagnostic.hpp"

#include <cmath>
#include <numeric>

#include "popgym/errors.hpp"

namespace popgym {

namespace {

SpaceDescriptor one_hot_features(std::size_t dims) { return SpaceDescriptor::box(dims, 0.0, 1.0); }

int draw_symbol(Pcg32& rng) { return static_cast<int>(rng.below(kDiagnosticSymbols)); }

}  // namespace

// ---------------------------------------------------------------------------
// Repeat First

RepeatFirstEnv::RepeatFirstEnv(Difficulty d, RepeatFirstConfig config)
    : Env(EnvKind::RepeatFirst, d, one_hot_features(kDiagnosticSymbols + 1),
          SpaceDescriptor::discrete(kDiagnosticSymbols), config.episode_length),
      config_(config) {
  if (config_.episode_length < 2) throw InvalidConfig("RepeatFirst needs T >= 2");
}

void RepeatFirstEnv::on_reset(EpisodeSeed seed) {
  level_ = rng_stream(seed, streams::kLevel);
  ledger_.reset();
  correct_ = wrong_ = 0;
  first_ = draw_symbol(level_);
  current_ = first_;
}

Env::Transition RepeatFirstEnv::on_step(const Action& action) {
  const int t = elapsed_steps();
  double reward = 0.0;
  if (t >= 1) {
    (action.index == first_ ? correct_ : wrong_) += 1;
    reward = ledger_.emit_fraction(correct_ - wrong_, config_.episode_length - 1);
  }
  current_ = draw_symbol(level_);
  return {reward, t + 1 >= config_.episode_length};
}

void RepeatFirstEnv::write_features(std::span<float> out) const {
  out[kValueOffset + static_cast<std::size_t>(current_)] = 1.0F;
  if (elapsed_steps() == 0) out[kFlagOffset] = 1.0F;
}

// First value, value on screen, and time step are all latent.
double RepeatFirstEnv::log2_latent_states() const {
  return std::log2(16.0 * config_.episode_length);
}

// ---------------------------------------------------------------------------
// Repeat Previous

RepeatPreviousEnv::RepeatPreviousEnv(Difficulty d, RepeatPreviousConfig config)
    : Env(EnvKind::RepeatPrevious, d, one_hot_features(kDiagnosticSymbols),
          SpaceDescriptor::discrete(kDiagnosticSymbols), config.episode_length),
      config_(config) {
  if (config_.lag < 1 || config_.lag >= config_.episode_length) {
    throw InvalidConfig("RepeatPrevious needs 1 <= k < T");
  }
  ring_.assign(static_cast<std::size_t>(config_.lag) + 1, 0);
}

void RepeatPreviousEnv::on_reset(EpisodeSeed seed) {
  level_ = rng_stream(seed, streams::kLevel);
  ledger_.reset();
  correct_ = wrong_ = 0;
  std::fill(ring_.begin(), ring_.end(), 0);
  shown_ = draw_symbol(level_);
  ring_[0] = static_cast<std::uint8_t>(shown_);
}

Env::Transition RepeatPreviousEnv::on_step(const Action& action) {
  const int t = elapsed_steps();
  const int k = config_.lag;
  const auto slots = static_cast<int>(ring_.size());
  double reward = 0.0;
  if (t >= k) {
    const int target = ring_[static_cast<std::size_t>((t - k) % slots)];
    (action.index == target ? correct_ : wrong_) += 1;
    reward = ledger_.emit_fraction(correct_ - wrong_, config_.episode_length - k);
  }
  shown_ = draw_symbol(level_);
  ring_[static_cast<std::size_t>((t + 1) % slots)] = static_cast<std::uint8_t>(shown_);
  return {reward, t + 1 >= config_.episode_length};
}

void RepeatPreviousEnv::write_features(std::span<float> out) const {
  out[static_cast<std::size_t>(shown_)] = 1.0F;
}

std::vector<int> RepeatPreviousEnv::history() const {
  const int t = elapsed_steps();
  const auto slots = static_cast<int>(ring_.size());
  std::vector<int> values;
  for (int j = std::max(0, t - config_.lag); j <= t; ++j) {
    values.push_back(ring_[static_cast<std::size_t>(j % slots)]);
  }
  return values;
}

// The last k values are latent (4^k suffixes) and none but the newest is shown.
double RepeatPreviousEnv::log2_latent_states() const { return 2.0 * config_.lag; }

// ---------------------------------------------------------------------------
// Autoencode

AutoencodeEnv::AutoencodeEnv(Difficulty d, AutoencodeConfig config)
    : Env(EnvKind::Autoencode, d, one_hot_features(kDiagnosticSymbols + 1),
          SpaceDescriptor::discrete(kDiagnosticSymbols), 2 * config.deck_length()),
      config_(config) {
  if (config_.decks < 1) throw InvalidConfig("Autoencode needs at least one deck");
  deck_.resize(static_cast<std::size_t>(config_.deck_length()));
}

void AutoencodeEnv::on_reset(EpisodeSeed seed) {
  Pcg32 level = rng_stream(seed, streams::kLevel);
  ledger_.reset();
  correct_ = wrong_ = 0;
  for (std::size_t i = 0; i < deck_.size(); ++i) {
    deck_[i] = static_cast<std::uint8_t>(i % kDiagnosticSymbols);
  }
  level.shuffle(std::span<std::uint8_t>(deck_));
}

Env::Transition AutoencodeEnv::on_step(const Action& action) {
  const int t = elapsed_steps();
  const int length = config_.deck_length();
  if (t < length) return {0.0, false};

  const int j = t - length;
  const int position = config_.order == PlaybackOrder::Forward ? j : length - 1 - j;
  (action.index == deck_[static_cast<std::size_t>(position)] ? correct_ : wrong_) += 1;
  const double reward = ledger_.emit_fraction(correct_ - wrong_, length);
  return {reward, t + 1 >= 2 * length};
}

void AutoencodeEnv::write_features(std::span<float> out) const {
  const int t = elapsed_steps();
  if (t < config_.deck_length()) {
    out[kSuitOffset + deck_[static_cast<std::size_t>(t)]] = 1.0F;
    out[kWatchOffset] = 1.0F;
  }
}

// Distinct suit sequences of the shoe (a multinomial) times the 2L positions.
double AutoencodeEnv::log2_latent_states() const {
  const double n = config_.deck_length();
  const double per_suit = n / kDiagnosticSymbols;
  const double ln_multinomial =
      std::lgamma(n + 1.0) - kDiagnosticSymbols * std::lgamma(per_suit + 1.0);
  return ln_multinomial / std::log(2.0) + std::log2(2.0 * n);
}

}  // namespace popgym
