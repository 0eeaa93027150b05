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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "popgym/eval.hpp"
#include "popgym/registry.hpp"

namespace popgym {

enum class ReportFormat : std::uint8_t { Csv, Json };
ReportFormat parse_report_format(std::string_view text);

// Expands env tokens against difficulty tokens. A token is "all", an env
// name ("RepeatFirst"), or a full id ("popgym-RepeatFirst-Easy",
// "RepeatFirst-Easy"); full ids ignore `difficulties`. Difficulty tokens
// are e/m/h/all or full names. Throws UnknownEnvId / InvalidConfig.
std::vector<EnvSpec> resolve_targets(const std::vector<std::string>& envs,
                                     const std::vector<std::string>& difficulties);

struct BenchConfig {
  std::vector<EnvSpec> targets;
  // Total work units per worker, warmup included; an auto-reset is one unit.
  std::int64_t num_steps = 100000;
  std::int64_t warmup_steps = 1000;
  int num_workers = 1;
  std::uint64_t seed = 0;
  std::string out_path;  // empty: no report file
  ReportFormat format = ReportFormat::Csv;
};

// Throws InvalidConfig unless targets are non-empty, num_steps > warmup_steps
// >= 0 and num_workers >= 1.
void validate(const BenchConfig& config);

struct BenchResult {
  EnvSpec target;
  int workers = 1;
  double steps_per_sec_single = 0.0;
  double steps_per_sec_total = 0.0;  // sum of per-worker rates
  double wall_time_s = 0.0;          // of the multi-worker phase
  // Workload of one worker in the timed window; identical across workers.
  std::int64_t steps = 0;
  std::int64_t resets = 0;
};

// Uniform-random actions from a fixed stream per (seed, worker); episode i of
// a worker is seeded seed + i. Warmup units run untimed first.
std::vector<BenchResult> bench_fps(const BenchConfig& config);

// Columns: env,difficulty,workers,steps_per_sec_single,steps_per_sec_total,wall_time_s
void write_fps_csv(const std::vector<BenchResult>& results, std::ostream& out);
// A JSON array with one object per row and the same fields.
void write_fps_json(const std::vector<BenchResult>& results, std::ostream& out);
// Throws IoError when the file cannot be written.
void save_fps_report(const std::vector<BenchResult>& results, const std::string& path,
                     ReportFormat format);

// Runs every (target, agent) pair with seeds seed .. seed + episodes - 1 and
// writes one JSON line per report to `out_path` (skipped when empty).
std::vector<EvalReport> bench_eval(const std::vector<EnvSpec>& targets,
                                   const std::vector<std::string>& agents,
                                   std::int64_t episodes, std::uint64_t seed,
                                   const std::string& out_path);

}  // namespace popgym
