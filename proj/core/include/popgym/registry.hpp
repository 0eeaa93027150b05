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

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "popgym/env.hpp"

namespace popgym {

struct EnvSpec {
  EnvKind kind;
  Difficulty difficulty;
  friend bool operator==(const EnvSpec&, const EnvSpec&) = default;
};

// "popgym-<Name>-<Difficulty>", e.g. "popgym-RepeatPrevious-Hard".
std::string env_id(EnvKind kind, Difficulty difficulty);
// Accepts "popgym-<Name>-<Difficulty>" and "<Name>-<Difficulty>".
EnvSpec parse_env_id(std::string_view id);
// All 45 ids, in kind-major, Easy-Medium-Hard order.
std::vector<std::string> all_env_ids();

std::unique_ptr<Env> make_env(EnvKind kind, Difficulty difficulty);
std::unique_ptr<Env> make_env(std::string_view id);

// Observation and action space of a configuration.
std::pair<SpaceDescriptor, SpaceDescriptor> spaces(EnvKind kind, Difficulty difficulty);

}  // namespace popgym
