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

#include <algorithm>
#include <cmath>

#include "popgym/envs/games.hpp"
#include "popgym/errors.hpp"

namespace popgym {

CountRecallEnv::CountRecallEnv(Difficulty d, CountRecallConfig config)
    : Env(EnvKind::CountRecall, d,
          SpaceDescriptor::box(2 * static_cast<std::size_t>(config.num_values), 0.0, 1.0),
          SpaceDescriptor::discrete(config.episode_length + 1), config.episode_length),
      config_(config) {
  if (config_.num_values < 2) throw InvalidConfig("CountRecall needs at least two values");
  counts_.resize(static_cast<std::size_t>(config_.num_values));
}

void CountRecallEnv::draw() {
  const auto m = static_cast<std::uint32_t>(config_.num_values);
  next_ = static_cast<int>(level_.below(m));
  query_ = static_cast<int>(level_.below(m));
  ++counts_[static_cast<std::size_t>(next_)];
}

void CountRecallEnv::on_reset(EpisodeSeed seed) {
  level_ = rng_stream(seed, streams::kLevel);
  std::fill(counts_.begin(), counts_.end(), 0);
  ledger_.reset();
  correct_ = wrong_ = 0;
  draw();
}

Env::Transition CountRecallEnv::on_step(const Action& action) {
  (action.index == counts_[static_cast<std::size_t>(query_)] ? correct_ : wrong_) += 1;
  const double reward = ledger_.emit_fraction(correct_ - wrong_, config_.episode_length);
  const bool done = elapsed_steps() + 1 >= config_.episode_length;
  if (!done) draw();
  return {reward, done};
}

void CountRecallEnv::write_features(std::span<float> out) const {
  out[static_cast<std::size_t>(next_)] = 1.0F;
  out[static_cast<std::size_t>(config_.num_values + query_)] = 1.0F;
}

// Count vectors with total t over m values, summed over t < L, exceed the
// stars-and-bars count C(L - 1 + m - 1, m - 1) for the final step alone.
double CountRecallEnv::log2_latent_states() const {
  const double n = config_.episode_length - 1 + config_.num_values - 1;
  const double k = config_.num_values - 1;
  return (std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1)) / std::log(2.0);
}

}  // namespace popgym
