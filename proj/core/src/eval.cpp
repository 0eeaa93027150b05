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

#include "popgym/eval.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include <json.hpp>

#include "popgym/errors.hpp"
#include "popgym/registry.hpp"

namespace popgym {

std::string to_json_line(const EvalReport& report) {
  nlohmann::ordered_json j;
  j["env"] = report.env_id;
  j["agent"] = report.agent;
  j["episodes"] = report.episodes;
  j["mean_return"] = report.mean_return;
  j["std_error"] = report.std_error;
  j["min_return"] = report.min_return;
  j["max_return"] = report.max_return;
  j["info"] = report.info_means;
  return j.dump();
}

EvalReport eval_report_from_json(std::string_view line) {
  try {
    const auto j = nlohmann::json::parse(line);
    EvalReport r;
    r.env_id = j.at("env").get<std::string>();
    r.agent = j.at("agent").get<std::string>();
    r.episodes = j.at("episodes").get<std::int64_t>();
    r.mean_return = j.at("mean_return").get<double>();
    r.std_error = j.at("std_error").get<double>();
    r.min_return = j.at("min_return").get<double>();
    r.max_return = j.at("max_return").get<double>();
    r.info_means = j.at("info").get<std::map<std::string, double>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidConfig(std::string("bad eval record: ") + e.what());
  }
}

EpisodeOutcome run_episode(Env& env, Agent& agent, EpisodeSeed seed, EpisodeRecord* record) {
  Observation obs;
  env.reset(seed, obs);
  agent.begin_episode(env, seed);
  if (record) {
    *record = {};
    record->observations.push_back(obs);
  }
  StepResult step;
  EpisodeOutcome out;
  while (true) {
    const Action a = agent.act(obs);
    env.step(a, step);
    ++out.steps;
    if (record) {
      record->actions.push_back(a);
      record->rewards.push_back(step.reward);
      record->observations.push_back(step.obs);
    }
    if (step.terminated || step.truncated) break;
    obs.swap(step.obs);
  }
  out.episode_return = env.episode_return();
  out.terminated = step.terminated;
  out.info = std::move(step.info);
  return out;
}

EvalReport run_eval(EnvKind kind, Difficulty difficulty, std::string_view agent_name,
                    std::int64_t num_episodes, std::uint64_t base_seed, int workers) {
  // Resolve once up front so bad names fail before any thread starts.
  make_agent(agent_name, kind);
  const std::string name(agent_name);
  EvalReport r = run_eval(
      kind, difficulty, [&] { return make_agent(name, kind); }, num_episodes, base_seed, workers);
  r.agent = name;
  return r;
}

EvalReport run_eval(EnvKind kind, Difficulty difficulty, const AgentFactory& factory,
                    std::int64_t num_episodes, std::uint64_t base_seed, int workers) {
  if (num_episodes < 1) throw InvalidConfig("num_episodes must be >= 1");
  if (workers < 1) throw InvalidConfig("workers must be >= 1");
  const auto n = static_cast<std::size_t>(num_episodes);
  const auto k = std::min<std::size_t>(static_cast<std::size_t>(workers), n);

  std::vector<EpisodeOutcome> outcomes(n);
  std::vector<std::exception_ptr> errors(k);
  std::string agent_label;

  const auto work = [&](std::size_t w) {
    try {
      auto env = make_env(kind, difficulty);
      auto agent = factory();
      if (w == 0) agent_label = agent->name();
      for (std::size_t i = w; i < n; i += k) {
        outcomes[i] = run_episode(*env, *agent, EpisodeSeed(base_seed + i));
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (k == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < k; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  EvalReport r;
  r.env_id = env_id(kind, difficulty);
  r.agent = agent_label;
  r.episodes = num_episodes;
  r.returns.reserve(n);
  std::map<std::string, std::pair<double, std::int64_t>> info_sums;
  double sum = 0.0;
  for (const auto& o : outcomes) {
    r.returns.push_back(o.episode_return);
    sum += o.episode_return;
    for (const auto& [key, value] : o.info) {
      auto& [s, c] = info_sums[key];
      s += value;
      ++c;
    }
  }
  r.mean_return = sum / static_cast<double>(n);
  r.min_return = *std::min_element(r.returns.begin(), r.returns.end());
  r.max_return = *std::max_element(r.returns.begin(), r.returns.end());
  if (n > 1) {
    double ss = 0.0;
    for (double x : r.returns) ss += (x - r.mean_return) * (x - r.mean_return);
    r.std_error = std::sqrt(ss / static_cast<double>(n - 1) / static_cast<double>(n));
  }
  for (const auto& [key, sc] : info_sums) {
    r.info_means[key] = sc.first / static_cast<double>(sc.second);
  }
  return r;
}

}  // namespace popgym
