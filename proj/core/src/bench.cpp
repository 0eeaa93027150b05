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

#include "popgym/bench.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <fstream>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "popgym/errors.hpp"
#include "popgym/rng.hpp"

namespace popgym {

namespace {

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

struct WorkerRun {
  double seconds = 0.0;
  std::int64_t steps = 0;
  std::int64_t resets = 0;
};

WorkerRun run_worker(const EnvSpec& target, const BenchConfig& config, int worker) {
  auto env = make_env(target.kind, target.difficulty);
  const SpaceDescriptor& space = env->action_space();
  const bool discrete = space.kind() == SpaceDescriptor::Kind::Discrete;
  const auto n = discrete ? static_cast<std::uint32_t>(space.n()) : 0U;
  const double lo = discrete ? 0.0 : space.low()[0];
  const double hi = discrete ? 0.0 : space.high()[0];

  const std::uint64_t stream_key = config.seed ^ (static_cast<std::uint64_t>(worker) << 48U);
  Pcg32 rng = rng_stream(EpisodeSeed(stream_key), streams::kAgent);
  std::uint64_t episode = 0;
  Observation obs;
  StepResult step;
  bool done = true;

  WorkerRun run;
  const auto unit = [&](bool timed) {
    if (done) {
      env->reset(EpisodeSeed(config.seed + episode++), obs);
      done = false;
      if (timed) ++run.resets;
      return;
    }
    const Action a = discrete ? Action::discrete(rng.below(n)) : Action::continuous(rng.uniform(lo, hi));
    env->step(a, step);
    done = step.terminated || step.truncated;
    if (timed) ++run.steps;
  };

  for (std::int64_t i = 0; i < config.warmup_steps; ++i) unit(false);
  const auto start = std::chrono::steady_clock::now();
  for (std::int64_t i = config.warmup_steps; i < config.num_steps; ++i) unit(true);
  run.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return run;
}

double rate(const WorkerRun& run) {
  const auto units = static_cast<double>(run.steps + run.resets);
  return run.seconds > 0.0 ? units / run.seconds : 0.0;
}

}  // namespace

ReportFormat parse_report_format(std::string_view text) {
  if (text == "csv") return ReportFormat::Csv;
  if (text == "json") return ReportFormat::Json;
  throw InvalidConfig("format must be csv or json, got '" + std::string(text) + "'");
}

std::vector<EnvSpec> resolve_targets(const std::vector<std::string>& envs,
                                     const std::vector<std::string>& difficulties) {
  std::vector<Difficulty> levels;
  for (const auto& d : difficulties) {
    if (d == "all") {
      levels.assign(std::begin(kAllDifficulties), std::end(kAllDifficulties));
      break;
    }
    levels.push_back(parse_difficulty(d));
  }
  std::vector<EnvSpec> out;
  for (const auto& token : envs) {
    if (token == "all") {
      for (EnvKind kind : kAllEnvKinds) {
        for (Difficulty d : levels) out.push_back({kind, d});
      }
    } else if (const auto kind = kind_from_name(token)) {
      for (Difficulty d : levels) out.push_back({*kind, d});
    } else {
      out.push_back(parse_env_id(token));
    }
  }
  return out;
}

void validate(const BenchConfig& config) {
  if (config.targets.empty()) throw InvalidConfig("no envs selected");
  if (config.warmup_steps < 0) throw InvalidConfig("warmup must be >= 0");
  if (config.num_steps <= config.warmup_steps) {
    throw InvalidConfig("steps must exceed warmup (" + std::to_string(config.num_steps) +
                        " <= " + std::to_string(config.warmup_steps) + ")");
  }
  if (config.num_workers < 1) throw InvalidConfig("workers must be >= 1");
}

std::vector<BenchResult> bench_fps(const BenchConfig& config) {
  validate(config);
  std::vector<BenchResult> results;
  for (const EnvSpec& target : config.targets) {
    BenchResult r;
    r.target = target;
    r.workers = config.num_workers;
    const WorkerRun single = run_worker(target, config, 0);
    r.steps = single.steps;
    r.resets = single.resets;
    r.steps_per_sec_single = rate(single);
    if (config.num_workers == 1) {
      r.steps_per_sec_total = r.steps_per_sec_single;
      r.wall_time_s = single.seconds;
    } else {
      std::vector<WorkerRun> runs(static_cast<std::size_t>(config.num_workers));
      std::vector<std::exception_ptr> errors(runs.size());
      std::vector<std::thread> pool;
      const auto start = std::chrono::steady_clock::now();
      for (std::size_t w = 0; w < runs.size(); ++w) {
        pool.emplace_back([&, w] {
          try {
            runs[w] = run_worker(target, config, static_cast<int>(w));
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
      for (const auto& run : runs) r.steps_per_sec_total += rate(run);
    }
    results.push_back(r);
  }
  if (!config.out_path.empty()) save_fps_report(results, config.out_path, config.format);
  return results;
}

void write_fps_csv(const std::vector<BenchResult>& results, std::ostream& out) {
  out << "env,difficulty,workers,steps_per_sec_single,steps_per_sec_total,wall_time_s\n";
  for (const auto& r : results) {
    out << name_of(r.target.kind) << ',' << to_string(r.target.difficulty) << ',' << r.workers
        << ',' << fmt_double(r.steps_per_sec_single) << ',' << fmt_double(r.steps_per_sec_total)
        << ',' << fmt_double(r.wall_time_s) << '\n';
  }
}

void write_fps_json(const std::vector<BenchResult>& results, std::ostream& out) {
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["env"] = name_of(r.target.kind);
    j["difficulty"] = to_string(r.target.difficulty);
    j["workers"] = r.workers;
    j["steps_per_sec_single"] = r.steps_per_sec_single;
    j["steps_per_sec_total"] = r.steps_per_sec_total;
    j["wall_time_s"] = r.wall_time_s;
    rows.push_back(std::move(j));
  }
  out << rows.dump(2) << '\n';
}

void save_fps_report(const std::vector<BenchResult>& results, const std::string& path,
                     ReportFormat format) {
  std::ofstream file(path);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  if (format == ReportFormat::Csv) {
    write_fps_csv(results, file);
  } else {
    write_fps_json(results, file);
  }
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

std::vector<EvalReport> bench_eval(const std::vector<EnvSpec>& targets,
                                   const std::vector<std::string>& agents,
                                   std::int64_t episodes, std::uint64_t seed,
                                   const std::string& out_path) {
  if (targets.empty()) throw InvalidConfig("no envs selected");
  if (agents.empty()) throw InvalidConfig("no agents selected");
  if (episodes < 1) throw InvalidConfig("episodes must be >= 1");
  // Fail on names before doing any work.
  for (const auto& a : agents) {
    bool known = false;
    for (auto name : kAgentNames) known = known || name == a;
    if (!known) throw UnknownAgent("unknown agent '" + a + "'");
  }
  std::vector<EvalReport> reports;
  for (const EnvSpec& t : targets) {
    for (const auto& a : agents) {
      reports.push_back(run_eval(t.kind, t.difficulty, a, episodes, seed));
    }
  }
  if (!out_path.empty()) {
    std::ofstream file(out_path);
    if (!file) throw IoError("cannot open '" + out_path + "' for writing");
    for (const auto& r : reports) file << to_json_line(r) << '\n';
    file.flush();
    if (!file) throw IoError("failed writing '" + out_path + "'");
  }
  return reports;
}

}  // namespace popgym
