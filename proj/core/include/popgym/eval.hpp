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

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "popgym/agents.hpp"
#include "popgym/env.hpp"

namespace popgym {

struct EvalReport {
  std::string env_id;
  std::string agent;
  std::int64_t episodes = 0;
  double mean_return = 0.0;
  double std_error = 0.0;  // sample stddev / sqrt(n); 0 for one episode
  double min_return = 0.0;
  double max_return = 0.0;
  // Mean of each terminal info key over the episodes that reported it.
  std::map<std::string, double> info_means;
  // Per-episode returns in seed order.
  std::vector<double> returns;
};

// One JSON object per line; `returns` is left out.
std::string to_json_line(const EvalReport& report);
EvalReport eval_report_from_json(std::string_view line);

struct EpisodeRecord {
  std::vector<Observation> observations;  // reset obs first
  std::vector<Action> actions;
  std::vector<double> rewards;
};

struct EpisodeOutcome {
  double episode_return = 0.0;
  int steps = 0;
  bool terminated = false;
  Info info;
};

// Plays one episode from env.reset(seed). Fills `record` when given.
EpisodeOutcome run_episode(Env& env, Agent& agent, EpisodeSeed seed,
                           EpisodeRecord* record = nullptr);

using AgentFactory = std::function<std::unique_ptr<Agent>()>;

// Plays seeds base_seed .. base_seed + n - 1. Results do not depend on
// `workers`; each worker owns its env and agent.
EvalReport run_eval(EnvKind kind, Difficulty difficulty, std::string_view agent_name,
                    std::int64_t num_episodes, std::uint64_t base_seed, int workers = 1);
EvalReport run_eval(EnvKind kind, Difficulty difficulty, const AgentFactory& factory,
                    std::int64_t num_episodes, std::uint64_t base_seed, int workers = 1);

}  // namespace popgym
