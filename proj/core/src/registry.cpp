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

#include "popgym/registry.hpp"

#include "popgym/envs/control.hpp"
#include "popgym/envs/diagnostic.hpp"
#include "popgym/envs/games.hpp"
#include "popgym/envs/nav.hpp"
#include "popgym/errors.hpp"

namespace popgym {

namespace {

constexpr std::string_view kPrefix = "popgym-";

struct KindName {
  EnvKind kind;
  std::string_view name;
  EnvFamily family;
};

constexpr KindName kNames[] = {
    {EnvKind::RepeatFirst, "RepeatFirst", EnvFamily::Diagnostic},
    {EnvKind::RepeatPrevious, "RepeatPrevious", EnvFamily::Diagnostic},
    {EnvKind::Autoencode, "Autoencode", EnvFamily::Diagnostic},
    {EnvKind::StatelessCartpole, "StatelessCartpole", EnvFamily::Control},
    {EnvKind::StatelessPendulum, "StatelessPendulum", EnvFamily::Control},
    {EnvKind::NoisyStatelessCartpole, "NoisyStatelessCartpole", EnvFamily::Control},
    {EnvKind::NoisyStatelessPendulum, "NoisyStatelessPendulum", EnvFamily::Control},
    {EnvKind::MultiarmedBandit, "MultiarmedBandit", EnvFamily::Diagnostic},
    {EnvKind::HigherLower, "HigherLower", EnvFamily::Game},
    {EnvKind::CountRecall, "CountRecall", EnvFamily::Game},
    {EnvKind::Concentration, "Concentration", EnvFamily::Game},
    {EnvKind::Battleship, "Battleship", EnvFamily::Game},
    {EnvKind::MineSweeper, "MineSweeper", EnvFamily::Game},
    {EnvKind::LabyrinthExplore, "LabyrinthExplore", EnvFamily::Navigation},
    {EnvKind::LabyrinthEscape, "LabyrinthEscape", EnvFamily::Navigation},
};

const KindName& entry(EnvKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

}  // namespace

std::string_view name_of(EnvKind kind) { return entry(kind).name; }

EnvFamily family_of(EnvKind kind) { return entry(kind).family; }

std::optional<EnvKind> kind_from_name(std::string_view name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.kind;
  }
  return std::nullopt;
}

std::string_view to_string(EnvFamily family) {
  switch (family) {
    case EnvFamily::Diagnostic: return "Diagnostic";
    case EnvFamily::Control: return "Control";
    case EnvFamily::Game: return "Game";
    case EnvFamily::Navigation: return "Navigation";
  }
  return "?";
}

std::string env_id(EnvKind kind, Difficulty difficulty) {
  return std::string(kPrefix) + std::string(name_of(kind)) + "-" +
         std::string(to_string(difficulty));
}

EnvSpec parse_env_id(std::string_view id) {
  std::string_view rest = id;
  if (rest.starts_with(kPrefix)) rest.remove_prefix(kPrefix.size());
  const auto dash = rest.rfind('-');
  if (dash == std::string_view::npos) throw UnknownEnvId("unknown env id '" + std::string(id) + "'");
  const auto kind = kind_from_name(rest.substr(0, dash));
  const std::string_view level = rest.substr(dash + 1);
  if (!kind || (level != "Easy" && level != "Medium" && level != "Hard")) {
    throw UnknownEnvId("unknown env id '" + std::string(id) + "'");
  }
  return {*kind, parse_difficulty(level)};
}

std::vector<std::string> all_env_ids() {
  std::vector<std::string> ids;
  for (EnvKind kind : kAllEnvKinds) {
    for (Difficulty d : kAllDifficulties) ids.push_back(env_id(kind, d));
  }
  return ids;
}

std::unique_ptr<Env> make_env(EnvKind kind, Difficulty d) {
  switch (kind) {
    case EnvKind::RepeatFirst: return std::make_unique<RepeatFirstEnv>(d);
    case EnvKind::RepeatPrevious: return std::make_unique<RepeatPreviousEnv>(d);
    case EnvKind::Autoencode: return std::make_unique<AutoencodeEnv>(d);
    case EnvKind::StatelessCartpole: return std::make_unique<StatelessCartpoleEnv>(d, false);
    case EnvKind::StatelessPendulum: return std::make_unique<StatelessPendulumEnv>(d, false);
    case EnvKind::NoisyStatelessCartpole: return std::make_unique<StatelessCartpoleEnv>(d, true);
    case EnvKind::NoisyStatelessPendulum: return std::make_unique<StatelessPendulumEnv>(d, true);
    case EnvKind::MultiarmedBandit: return std::make_unique<BanditEnv>(d);
    case EnvKind::HigherLower: return std::make_unique<HigherLowerEnv>(d);
    case EnvKind::CountRecall: return std::make_unique<CountRecallEnv>(d);
    case EnvKind::Concentration: return std::make_unique<ConcentrationEnv>(d);
    case EnvKind::Battleship: return std::make_unique<BattleshipEnv>(d);
    case EnvKind::MineSweeper: return std::make_unique<MineSweeperEnv>(d);
    case EnvKind::LabyrinthExplore: return std::make_unique<LabyrinthEnv>(LabyrinthMode::Explore, d);
    case EnvKind::LabyrinthEscape: return std::make_unique<LabyrinthEnv>(LabyrinthMode::Escape, d);
  }
  throw UnknownEnvId("unknown env kind");
}

std::unique_ptr<Env> make_env(std::string_view id) {
  const EnvSpec parsed = parse_env_id(id);
  return make_env(parsed.kind, parsed.difficulty);
}

std::pair<SpaceDescriptor, SpaceDescriptor> spaces(EnvKind kind, Difficulty difficulty) {
  const auto env = make_env(kind, difficulty);
  return {env->observation_space(), env->action_space()};
}

}  // namespace popgym
