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

ConcentrationConfig ConcentrationConfig::for_difficulty(Difficulty d) {
  ConcentrationConfig c;
  c.num_ranks = kNumRanks;
  switch (d) {
    case Difficulty::Easy:
      c.suits = {0, 1};
      c.rule = MatchRule::RankAndColor;
      break;
    case Difficulty::Medium:
      c.suits = {0, 1, 2, 3};
      c.rule = MatchRule::RankAndColor;
      break;
    case Difficulty::Hard:
      c.suits = {0, 1, 2, 3};
      c.rule = MatchRule::Rank;
      break;
  }
  c.max_steps = 4 * c.num_cards();
  return c;
}

bool cards_match(const Card& a, const Card& b, MatchRule rule) {
  if (a.rank != b.rank) return false;
  return rule == MatchRule::Rank || a.red() == b.red();
}

namespace {

void check(const ConcentrationConfig& c) {
  if (c.num_ranks < 1 || c.num_ranks > kNumRanks || c.suits.empty()) {
    throw InvalidConfig("Concentration needs 1..13 ranks and at least one suit");
  }
  int red = 0;
  for (auto s : c.suits) {
    if (s >= kNumSuits) throw InvalidConfig("suit index out of range");
    red += s < 2 ? 1 : 0;
  }
  const int black = static_cast<int>(c.suits.size()) - red;
  const bool pairable = c.rule == MatchRule::Rank ? c.suits.size() % 2 == 0
                                                  : red % 2 == 0 && black % 2 == 0;
  if (!pairable) throw InvalidConfig("Concentration deck cannot be fully paired");
}

}  // namespace

ConcentrationEnv::ConcentrationEnv(Difficulty d, ConcentrationConfig config)
    : Env(EnvKind::Concentration, d, SpaceDescriptor::box(kNumRanks + kNumSuits, 0.0, 1.0),
          SpaceDescriptor::discrete(config.num_cards()), config.max_steps),
      config_(std::move(config)) {
  check(config_);
  cards_.resize(static_cast<std::size_t>(config_.num_cards()));
  matched_.resize(cards_.size());
}

void ConcentrationEnv::on_reset(EpisodeSeed seed) {
  Pcg32 level = rng_stream(seed, streams::kLevel);
  std::size_t i = 0;
  for (auto suit : config_.suits) {
    for (int r = 0; r < config_.num_ranks; ++r) {
      cards_[i++] = Card{static_cast<std::uint8_t>(r), suit};
    }
  }
  level.shuffle(std::span<Card>(cards_));
  std::fill(matched_.begin(), matched_.end(), false);
  ledger_.reset();
  pending_.reset();
  shown_.reset();
  pairs_matched_ = penalties_ = flips_ = 0;
}

Env::Transition ConcentrationEnv::on_step(const Action& action) {
  const auto idx = static_cast<int>(action.index);
  const auto score = [this] {
    const std::int64_t pairs = config_.num_pairs();
    const std::int64_t budget = config_.max_steps;
    return ledger_.emit_fraction(pairs_matched_ * budget - penalties_ * pairs, pairs * budget);
  };

  if (matched_[static_cast<std::size_t>(idx)] || pending_ == idx) {
    ++penalties_;
    pending_.reset();
    shown_.reset();
    return {score(), false};
  }

  shown_ = cards_[static_cast<std::size_t>(idx)];
  if (!pending_) {
    pending_ = idx;
    return {0.0, false};
  }

  const int first = *pending_;
  pending_.reset();
  ++flips_;
  if (cards_match(cards_[static_cast<std::size_t>(first)], *shown_, config_.rule)) {
    matched_[static_cast<std::size_t>(first)] = true;
    matched_[static_cast<std::size_t>(idx)] = true;
    ++pairs_matched_;
  } else {
    ++penalties_;
  }
  return {score(), pairs_matched_ == config_.num_pairs()};
}

void ConcentrationEnv::write_features(std::span<float> out) const {
  if (!shown_) return;
  out[kRankOffset + shown_->rank] = 1.0F;
  out[kSuitOffset + shown_->suit] = 1.0F;
}

void ConcentrationEnv::write_episode_info(Info& info) const {
  info["pairs_matched"] = pairs_matched_;
  info["flips"] = flips_;
}

// Every card is distinct, so there are n! layouts.
double ConcentrationEnv::log2_latent_states() const {
  return std::lgamma(config_.num_cards() + 1.0) / std::log(2.0);
}

}  // namespace popgym
