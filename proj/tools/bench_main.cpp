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

// bench: throughput and evaluation harness.
//
//   bench fps  --envs all --difficulty all --steps 100000 --workers 1 --format csv
//   bench eval --envs RepeatFirst-Easy --agents oracle --episodes 100
//
// Exit status: 0 ok, 2 bad configuration, 3 env failure.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "popgym/bench.hpp"
#include "popgym/errors.hpp"

namespace {

constexpr int kConfigError = 2;
constexpr int kEnvError = 3;

std::vector<std::string> split_commas(const std::vector<std::string>& items) {
  std::vector<std::string> out;
  for (const auto& item : items) {
    std::size_t start = 0;
    while (start <= item.size()) {
      const std::size_t comma = item.find(',', start);
      const std::string part = item.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      if (!part.empty()) out.push_back(part);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"POPGym environment throughput and evaluation harness"};
  app.require_subcommand(1);

  std::vector<std::string> envs{"all"};
  std::vector<std::string> difficulties{"all"};
  std::uint64_t seed = 0;
  std::string out;

  popgym::BenchConfig fps;
  std::string format = "csv";
  auto* fps_cmd = app.add_subcommand("fps", "Random-action stepping throughput");
  fps_cmd->add_option("--envs", envs, "Env names or ids, comma separated, or 'all'");
  fps_cmd->add_option("--difficulty", difficulties, "e, m, h or all");
  fps_cmd->add_option("--steps", fps.num_steps, "Work units per worker, warmup included");
  fps_cmd->add_option("--workers", fps.num_workers, "Parallel workers");
  fps_cmd->add_option("--warmup", fps.warmup_steps, "Untimed leading units");
  fps_cmd->add_option("--seed", seed, "Base seed");
  fps_cmd->add_option("--out", out, "Report path (stdout when omitted)");
  fps_cmd->add_option("--format", format, "csv or json");

  std::vector<std::string> agents{"random"};
  std::int64_t episodes = 100;
  auto* eval_cmd = app.add_subcommand("eval", "Scripted agent evaluation");
  eval_cmd->add_option("--envs", envs, "Env names or ids, comma separated, or 'all'");
  eval_cmd->add_option("--difficulty", difficulties, "e, m, h or all");
  eval_cmd->add_option("--agents", agents, "Agent names, comma separated");
  eval_cmd->add_option("--episodes", episodes, "Episodes per (env, agent)");
  eval_cmd->add_option("--seed", seed, "Base seed");
  eval_cmd->add_option("--out", out, "JSON-lines report path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    const auto targets = popgym::resolve_targets(split_commas(envs), split_commas(difficulties));
    if (fps_cmd->parsed()) {
      fps.targets = targets;
      fps.seed = seed;
      fps.format = popgym::parse_report_format(format);
      fps.out_path = out;
      const auto results = popgym::bench_fps(fps);
      if (out.empty()) {
        if (fps.format == popgym::ReportFormat::Csv) {
          popgym::write_fps_csv(results, std::cout);
        } else {
          popgym::write_fps_json(results, std::cout);
        }
      }
    } else {
      const auto reports = popgym::bench_eval(targets, split_commas(agents), episodes, seed, out);
      if (out.empty()) {
        for (const auto& r : reports) std::cout << popgym::to_json_line(r) << '\n';
      }
    }
  } catch (const popgym::InvalidConfig& e) {
    std::cerr << "bench: " << e.what() << '\n';
    return kConfigError;
  } catch (const popgym::UnknownEnvId& e) {
    std::cerr << "bench: " << e.what() << '\n';
    return kConfigError;
  } catch (const popgym::UnknownAgent& e) {
    std::cerr << "bench: " << e.what() << '\n';
    return kConfigError;
  } catch (const popgym::Error& e) {
    std::cerr << "bench: " << e.what() << '\n';
    return kEnvError;
  }
  return 0;
}
