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

#include "popgym/agents.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include "popgym/envs/diagnostic.hpp"
#include "popgym/envs/games.hpp"
#include "popgym/envs/nav.hpp"
#include "popgym/errors.hpp"
#include "popgym/rng.hpp"

namespace popgym {

namespace {

int argmax(std::span<const float> values) {
  return static_cast<int>(std::max_element(values.begin(), values.end()) - values.begin());
}

bool any_set(std::span<const float> values) {
  return std::any_of(values.begin(), values.end(), [](float v) { return v > 0.5F; });
}

template <typename T>
const T& env_as(const Env& env, std::string_view agent) {
  const auto* typed = dynamic_cast<const T*>(&env);
  if (!typed) {
    throw UnsupportedEnv(std::string(agent) + " cannot play " + env.id());
  }
  return *typed;
}

class RandomAgent final : public Agent {
 public:
  std::string_view name() const override { return "random"; }
  void begin_episode(const Env& env, EpisodeSeed seed) override {
    rng_ = rng_stream(seed, streams::kAgent);
    space_ = &env.action_space();
  }
  Action act(std::span<const float>) override {
    if (space_->kind() == SpaceDescriptor::Kind::Discrete) {
      return Action::discrete(rng_.below(static_cast<std::uint32_t>(space_->n())));
    }
    return Action::continuous(rng_.uniform(space_->low()[0], space_->high()[0]));
  }

 private:
  Pcg32 rng_;
  const SpaceDescriptor* space_ = nullptr;
};

class ConstantAgent final : public Agent {
 public:
  std::string_view name() const override { return "constant"; }
  void begin_episode(const Env&, EpisodeSeed) override {}
  Action act(std::span<const float>) override { return Action{}; }
};

// ---------------------------------------------------------------------------
// Oracles

class RepeatFirstOracle final : public Agent {
 public:
  std::string_view name() const override { return "oracle"; }
  void begin_episode(const Env& env, EpisodeSeed) override {
    env_as<RepeatFirstEnv>(env, name());
    latched_.reset();
  }
  Action act(std::span<const float> obs) override {
    if (!latched_ && obs[RepeatFirstEnv::kFlagOffset] > 0.5F) {
      latched_ = argmax(obs.subspan(RepeatFirstEnv::kValueOffset, kDiagnosticSymbols));
    }
    return Action::discrete(latched_.value_or(0));
  }

 private:
  std::optional<int> latched_;
};

class RepeatPreviousOracle final : public Agent {
 public:
  std::string_view name() const override { return "oracle"; }
  void begin_episode(const Env& env, EpisodeSeed) override {
    lag_ = env_as<RepeatPreviousEnv>(env, name()).config().lag;
    ring_.assign(static_cast<std::size_t>(lag_) + 1, 0);
    t_ = 0;
  }
  Action act(std::span<const float> obs) override {
    const auto slots = static_cast<int>(ring_.size());
    ring_[static_cast<std::size_t>(t_ % slots)] = argmax(obs.first(kDiagnosticSymbols));
    const int answer = t_ >= lag_ ? ring_[static_cast<std::size_t>((t_ - lag_) % slots)] : 0;
    ++t_;
    return Action::discrete(answer);
  }

 private:
  int lag_ = 1;
  int t_ = 0;
  std::vector<int> ring_;
};

class AutoencodeOracle final : public Agent {
 public:
  std::string_view name() const override { return "oracle"; }
  void begin_episode(const Env& env, EpisodeSeed) override {
    order_ = env_as<AutoencodeEnv>(env, name()).config().order;
    watched_.clear();
    played_ = 0;
  }
  Action act(std::span<const float> obs) override {
    if (obs[AutoencodeEnv::kWatchOffset] > 0.5F) {
      watched_.push_back(argmax(obs.subspan(AutoencodeEnv::kSuitOffset, kDiagnosticSymbols)));
      return Action::discrete(0);
    }
    const int n = static_cast<int>(watched_.size());
    const int j = played_++;
    const int pos = order_ == PlaybackOrder::Forward ? j : n - 1 - j;
    return Action::discrete(pos >= 0 && pos < n ? watched_[static_cast<std::size_t>(pos)] : 0);
  }

 private:
  PlaybackOrder order_ = PlaybackOrder::Forward;
  std::vector<int> watched_;
  int played_ = 0;
};

class CountRecallOracle final : public Agent {
 public:
  std::string_view name() const override { return "oracle"; }
  void begin_episode(const Env& env, EpisodeSeed) override {
    values_ = env_as<CountRecallEnv>(env, name()).config().num_values;
    counts_.assign(static_cast<std::size_t>(values_), 0);
  }
  Action act(std::span<const float> obs) override {
    const auto next = static_cast<std::size_t>(values_);
    ++counts_[static_cast<std::size_t>(argmax(obs.first(next)))];
    return Action::discrete(counts_[static_cast<std::size_t>(argmax(obs.subspan(next, next)))]);
  }

 private:
  int values_ = 4;
  std::vector<int> counts_;
};

// Fires every cell once in row-major order.
class BattleshipSweep final : public Agent {
 public:
  std::string_view name() const override { return "oracle"; }
  void begin_episode(const Env& env, EpisodeSeed) override {
    cells_ = env_as<BattleshipEnv>(env, name()).config().cells();
    next_ = 0;
  }
  Action act(std::span<const float>) override { return Action::discrete(next_++ % cells_); }

 private:
  int cells_ = 1;
  int next_ = 0;
};

// White-box: reads the mine layout and clicks every safe cell once.
class MineSweeperSafeClicker final : public Agent {
 public:
  std::string_view name() const override { return "oracle"; }
  void begin_episode(const Env& env, EpisodeSeed) override {
    const auto& mines = env_as<MineSweeperEnv>(env, name()).mines();
    safe_.clear();
    for (std::size_t i = 0; i < mines.size(); ++i) {
      if (!mines[i]) safe_.push_back(static_cast<int>(i));
    }
    next_ = 0;
  }
  Action act(std::span<const float>) override {
    return Action::discrete(safe_[next_++ % safe_.size()]);
  }

 private:
  std::vector<int> safe_;
  std::size_t next_ = 0;
};

// Perfect memory Concentration play: match any known pair first, otherwise
// turn an unseen card and, if its partner is known, take it.
class ConcentrationMemory final : public Agent {
 public:
  explicit ConcentrationMemory(bool spiteful = false) : spiteful_(spiteful) {}

  std::string_view name() const override { return spiteful_ ? "adversarial" : "oracle"; }

  void begin_episode(const Env& env, EpisodeSeed) override {
    const auto& config = env_as<ConcentrationEnv>(env, name()).config();
    rule_ = config.rule;
    const auto n = static_cast<std::size_t>(config.num_cards());
    known_.assign(n, std::nullopt);
    removed_.assign(n, false);
    pending_.reset();
    last_.reset();
    spam_.reset();
  }

  Action act(std::span<const float> obs) override {
    if (last_) absorb(*last_, obs);
    if (spam_) return remember(*spam_);

    if (!pending_) {
      if (const auto pair = known_pair()) {
        pending_ = pair->first;
        return remember(pair->first);
      }
      pending_ = first_unseen(-1);
      return remember(*pending_);
    }
    const Card& first = *known_[static_cast<std::size_t>(*pending_)];
    for (std::size_t i = 0; i < known_.size(); ++i) {
      if (static_cast<int>(i) != *pending_ && !removed_[i] && known_[i] &&
          cards_match(first, *known_[i], rule_)) {
        return remember(static_cast<int>(i));
      }
    }
    return remember(first_unseen(*pending_));
  }

 private:
  Action remember(int idx) {
    last_ = idx;
    return Action::discrete(idx);
  }

  void absorb(int idx, std::span<const float> obs) {
    if (!any_set(obs.first(kNumRanks))) return;  // wasted selection
    const Card card{static_cast<std::uint8_t>(argmax(obs.subspan(ConcentrationEnv::kRankOffset, kNumRanks))),
                    static_cast<std::uint8_t>(argmax(obs.subspan(ConcentrationEnv::kSuitOffset, kNumSuits)))};
    known_[static_cast<std::size_t>(idx)] = card;
    if (!pending_ || *pending_ == idx) return;
    const int first = *pending_;
    pending_.reset();
    if (cards_match(*known_[static_cast<std::size_t>(first)], card, rule_)) {
      removed_[static_cast<std::size_t>(first)] = true;
      removed_[static_cast<std::size_t>(idx)] = true;
      if (spiteful_) spam_ = first;
    }
  }

  std::optional<std::pair<int, int>> known_pair() const {
    for (std::size_t i = 0; i < known_.size(); ++i) {
      if (removed_[i] || !known_[i]) continue;
      for (std::size_t j = i + 1; j < known_.size(); ++j) {
        if (!removed_[j] && known_[j] && cards_match(*known_[i], *known_[j], rule_)) {
          return std::pair{static_cast<int>(i), static_cast<int>(j)};
        }
      }
    }
    return std::nullopt;
  }

  int first_unseen(int except) const {
    for (std::size_t i = 0; i < known_.size(); ++i) {
      if (static_cast<int>(i) != except && !removed_[i] && !known_[i]) return static_cast<int>(i);
    }
    for (std::size_t i = 0; i < known_.size(); ++i) {
      if (static_cast<int>(i) != except && !removed_[i]) return static_cast<int>(i);
    }
    return 0;
  }

  bool spiteful_;
  MatchRule rule_ = MatchRule::RankAndColor;
  std::vector<std::optional<Card>> known_;
  std::vector<bool> removed_;
  std::optional<int> pending_;
  std::optional<int> last_;
  std::optional<int> spam_;
};

// ---------------------------------------------------------------------------
// Navigation

class WallFollower final : public Agent {
 public:
  std::string_view name() const override { return "wall_follower"; }
  void begin_episode(const Env& env, EpisodeSeed) override {
    env_as<LabyrinthEnv>(env, name());
    heading_ = 0;
  }
  Action act(std::span<const float> obs) override {
    // Window cells of the N, E, S, W neighbours.
    static constexpr std::size_t kNeighbour[4] = {1, 5, 7, 3};
    for (int turn : {3, 0, 1, 2}) {  // left, straight, right, back
      const int dir = (heading_ + turn) % 4;
      if (obs[kNeighbour[dir]] < 0.5F) {
        heading_ = dir;
        return Action::discrete(dir);
      }
    }
    return Action::discrete(heading_);
  }

 private:
  int heading_ = 0;
};

// Walks into a wall every step, so every step pays only the time penalty.
class WallBumper final : public Agent {
 public:
  std::string_view name() const override { return "adversarial"; }
  void begin_episode(const Env&, EpisodeSeed) override {}
  Action act(std::span<const float> obs) override {
    static constexpr std::size_t kNeighbour[4] = {1, 5, 7, 3};
    for (int dir = 0; dir < 4; ++dir) {
      if (obs[kNeighbour[dir]] > 0.5F) return Action::discrete(dir);
    }
    return Action::discrete(0);
  }
};

// ---------------------------------------------------------------------------
// Higher Lower

class CardCounter final : public Agent {
 public:
  explicit CardCounter(bool contrary = false) : contrary_(contrary) {}
  std::string_view name() const override { return contrary_ ? "adversarial" : "card_counter"; }
  void begin_episode(const Env& env, EpisodeSeed) override {
    const int decks = env_as<HigherLowerEnv>(env, name()).config().decks;
    remaining_.fill(4 * decks);
  }
  Action act(std::span<const float> obs) override {
    const int rank = argmax(obs.first(kNumRanks));
    --remaining_[static_cast<std::size_t>(rank)];
    int lower = 0;
    int higher = 0;
    for (int r = 0; r < kNumRanks; ++r) {
      (r < rank ? lower : higher) += r == rank ? 0 : remaining_[static_cast<std::size_t>(r)];
    }
    const bool guess_higher = higher >= lower;
    return Action::discrete(guess_higher != contrary_ ? kGuessHigher : kGuessLower);
  }

 private:
  bool contrary_;
  std::array<int, kNumRanks> remaining_{};
};

class MemorylessDp final : public Agent {
 public:
  std::string_view name() const override { return "memoryless_dp"; }
  void begin_episode(const Env& env, EpisodeSeed) override {
    const int decks = env_as<HigherLowerEnv>(env, name()).config().decks;
    if (decks != decks_ || table_.guess.empty()) {
      decks_ = decks;
      table_ = solve_memoryless_higher_lower(kNumRanks, 4 * decks);
    }
  }
  Action act(std::span<const float> obs) override {
    return Action::discrete(table_.guess[static_cast<std::size_t>(argmax(obs.first(kNumRanks)))]);
  }

 private:
  int decks_ = 0;
  MemorylessHigherLower table_;
};

// ---------------------------------------------------------------------------
// Adversaries

// Answers whatever the wrapped oracle would not.
class Contrarian final : public Agent {
 public:
  Contrarian(std::unique_ptr<Agent> inner, int choices)
      : inner_(std::move(inner)), choices_(choices) {}
  std::string_view name() const override { return "adversarial"; }
  void begin_episode(const Env& env, EpisodeSeed seed) override {
    inner_->begin_episode(env, seed);
    if (env.action_space().kind() == SpaceDescriptor::Kind::Discrete) {
      choices_ = static_cast<int>(env.action_space().n());
    }
  }
  Action act(std::span<const float> obs) override {
    const Action a = inner_->act(obs);
    return Action::discrete((a.index + 1) % choices_);
  }

 private:
  std::unique_ptr<Agent> inner_;
  int choices_;
};

// Samples every arm once, then keeps pulling the worst empirical arm.
class BanditSpoiler final : public Agent {
 public:
  std::string_view name() const override { return "adversarial"; }
  void begin_episode(const Env& env, EpisodeSeed) override {
    const auto arms = static_cast<std::size_t>(env.action_space().n());
    pulls_.assign(arms, 0);
    wins_.assign(arms, 0);
    feature_dim_ = env.feature_dim();
    t_ = 0;
  }
  Action act(std::span<const float> obs) override {
    if (t_ > 0) {
      const auto arm = static_cast<std::size_t>(argmax(obs.subspan(feature_dim_)));
      ++pulls_[arm];
      wins_[arm] += obs[0] > 0.5F ? 1 : 0;
    }
    const auto arms = static_cast<int>(pulls_.size());
    if (t_ < arms) return Action::discrete(t_++);
    ++t_;
    int worst = 0;
    double worst_rate = 2.0;
    for (int i = 0; i < arms; ++i) {
      const double rate = static_cast<double>(wins_[static_cast<std::size_t>(i)]) /
                          static_cast<double>(std::max(1, pulls_[static_cast<std::size_t>(i)]));
      if (rate < worst_rate) {
        worst_rate = rate;
        worst = i;
      }
    }
    return Action::discrete(worst);
  }

 private:
  std::vector<int> pulls_;
  std::vector<int> wins_;
  std::size_t feature_dim_ = 1;
  int t_ = 0;
};

// Fires on one water cell over and over. Finds water by scanning until a miss.
class BattleshipRepeater final : public Agent {
 public:
  std::string_view name() const override { return "adversarial"; }
  void begin_episode(const Env&, EpisodeSeed) override {
    target_ = 0;
    locked_ = false;
    t_ = 0;
  }
  Action act(std::span<const float> obs) override {
    if (t_++ > 0 && !locked_) {
      if (obs[0] < 0.5F) {
        locked_ = true;
      } else {
        ++target_;
      }
    }
    return Action::discrete(target_);
  }

 private:
  int target_ = 0;
  bool locked_ = false;
  int t_ = 0;
};

// White-box: repeats one safe cell until the last step, then clicks a mine.
class MineSweeperSpoiler final : public Agent {
 public:
  std::string_view name() const override { return "adversarial"; }
  void begin_episode(const Env& env, EpisodeSeed) override {
    const auto& ms = env_as<MineSweeperEnv>(env, name());
    const auto& mines = ms.mines();
    safe_ = static_cast<int>(std::find(mines.begin(), mines.end(), std::uint8_t{0}) - mines.begin());
    mine_ = static_cast<int>(std::find(mines.begin(), mines.end(), std::uint8_t{1}) - mines.begin());
    last_step_ = ms.max_steps() - 1;
    t_ = 0;
  }
  Action act(std::span<const float>) override {
    return Action::discrete(t_++ >= last_step_ ? mine_ : safe_);
  }

 private:
  int safe_ = 0;
  int mine_ = 0;
  int last_step_ = 0;
  int t_ = 0;
};

class ExtremeTorque final : public Agent {
 public:
  std::string_view name() const override { return "adversarial"; }
  void begin_episode(const Env&, EpisodeSeed) override {}
  Action act(std::span<const float> obs) override {
    // Push along the current spin to keep the pendulum whirling.
    return Action::continuous(obs[0] >= 0.0F ? 1.0 : -1.0);
  }
};

}  // namespace

std::unique_ptr<Agent> random_agent() { return std::make_unique<RandomAgent>(); }
std::unique_ptr<Agent> constant_agent() { return std::make_unique<ConstantAgent>(); }
std::unique_ptr<Agent> wall_follower() { return std::make_unique<WallFollower>(); }
std::unique_ptr<Agent> card_counter() { return std::make_unique<CardCounter>(); }
std::unique_ptr<Agent> memoryless_dp() { return std::make_unique<MemorylessDp>(); }

std::unique_ptr<Agent> oracle_for(EnvKind kind) {
  switch (kind) {
    case EnvKind::RepeatFirst: return std::make_unique<RepeatFirstOracle>();
    case EnvKind::RepeatPrevious: return std::make_unique<RepeatPreviousOracle>();
    case EnvKind::Autoencode: return std::make_unique<AutoencodeOracle>();
    case EnvKind::CountRecall: return std::make_unique<CountRecallOracle>();
    case EnvKind::Battleship: return std::make_unique<BattleshipSweep>();
    case EnvKind::MineSweeper: return std::make_unique<MineSweeperSafeClicker>();
    case EnvKind::Concentration: return std::make_unique<ConcentrationMemory>();
    default:
      throw UnsupportedEnv("no oracle for " + std::string(name_of(kind)));
  }
}

std::unique_ptr<Agent> adversarial_agent(EnvKind kind) {
  switch (kind) {
    case EnvKind::RepeatFirst:
    case EnvKind::RepeatPrevious:
    case EnvKind::Autoencode:
    case EnvKind::CountRecall:
      return std::make_unique<Contrarian>(oracle_for(kind), kDiagnosticSymbols);
    case EnvKind::HigherLower: return std::make_unique<CardCounter>(true);
    case EnvKind::MultiarmedBandit: return std::make_unique<BanditSpoiler>();
    case EnvKind::Concentration: return std::make_unique<ConcentrationMemory>(true);
    case EnvKind::Battleship: return std::make_unique<BattleshipRepeater>();
    case EnvKind::MineSweeper: return std::make_unique<MineSweeperSpoiler>();
    case EnvKind::LabyrinthExplore:
    case EnvKind::LabyrinthEscape: return std::make_unique<WallBumper>();
    case EnvKind::StatelessPendulum:
    case EnvKind::NoisyStatelessPendulum: return std::make_unique<ExtremeTorque>();
    case EnvKind::StatelessCartpole:
    case EnvKind::NoisyStatelessCartpole: return std::make_unique<ConstantAgent>();
  }
  throw UnsupportedEnv("no adversary for this env");
}

std::unique_ptr<Agent> make_agent(std::string_view name, EnvKind kind) {
  const bool labyrinth = kind == EnvKind::LabyrinthExplore || kind == EnvKind::LabyrinthEscape;
  if (name == "random") return random_agent();
  if (name == "constant") return constant_agent();
  if (name == "adversarial") return adversarial_agent(kind);
  if (name == "oracle") return oracle_for(kind);
  if (name == "wall_follower") {
    if (!labyrinth) throw UnsupportedEnv("wall_follower only plays labyrinths");
    return wall_follower();
  }
  if (name == "card_counter" || name == "memoryless_dp") {
    if (kind != EnvKind::HigherLower) throw UnsupportedEnv(std::string(name) + " only plays HigherLower");
    return name == "card_counter" ? card_counter() : memoryless_dp();
  }
  throw UnknownAgent("unknown agent '" + std::string(name) + "'");
}

MemorylessHigherLower solve_memoryless_higher_lower(int num_ranks, int copies) {
  if (num_ranks < 2 || copies < 1) throw InvalidConfig("need >= 2 ranks and >= 1 copy");
  const int n = num_ranks * copies;
  MemorylessHigherLower out;
  out.guess.resize(static_cast<std::size_t>(num_ranks));
  double edge = 0.0;
  for (int r = 0; r < num_ranks; ++r) {
    const int higher = copies * (num_ranks - 1 - r);
    const int lower = copies * r;
    out.guess[static_cast<std::size_t>(r)] = higher >= lower ? kGuessHigher : kGuessLower;
    edge += std::abs(higher - lower);
  }
  // P(face-up rank) = 1/R; right minus wrong per comparison = |H - L| / (n - 1).
  out.expected_return = edge / (static_cast<double>(num_ranks) * (n - 1));
  return out;
}

}  // namespace popgym
