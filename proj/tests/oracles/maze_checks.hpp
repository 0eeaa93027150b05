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

#include <string>
#include <vector>

#include "popgym/envs/maze.hpp"

namespace popgym::testing {

// A perfect maze: walled border, free cells connected, and no cycles, which
// for a connected grid graph means free cells == corridor edges + 1.
inline std::string check_perfect_maze(const Maze& m) {
  const int w = m.width();
  const int h = m.height();
  for (int c = 0; c < w; ++c) {
    if (!m.is_wall(0, c) || !m.is_wall(h - 1, c)) return "border open";
  }
  for (int r = 0; r < h; ++r) {
    if (!m.is_wall(r, 0) || !m.is_wall(r, w - 1)) return "border open";
  }
  int free = 0;
  int edges = 0;
  int first = -1;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (m.is_wall(r, c)) continue;
      ++free;
      if (first < 0) first = r * w + c;
      if (c + 1 < w && !m.is_wall(r, c + 1)) ++edges;
      if (r + 1 < h && !m.is_wall(r + 1, c)) ++edges;
    }
  }
  if (free == 0) return "no free cells";
  // Flood fill with an explicit stack.
  std::vector<char> seen(static_cast<std::size_t>(w * h), 0);
  std::vector<int> stack{first};
  seen[static_cast<std::size_t>(first)] = 1;
  int reached = 0;
  while (!stack.empty()) {
    const int cell = stack.back();
    stack.pop_back();
    ++reached;
    const int r = cell / w;
    const int c = cell % w;
    const int nbr[4][2] = {{r - 1, c}, {r + 1, c}, {r, c - 1}, {r, c + 1}};
    for (const auto& n : nbr) {
      if (m.is_wall(n[0], n[1])) continue;
      const int id = n[0] * w + n[1];
      if (!seen[static_cast<std::size_t>(id)]) {
        seen[static_cast<std::size_t>(id)] = 1;
        stack.push_back(id);
      }
    }
  }
  if (reached != free) return "disconnected";
  if (free != edges + 1) return "cycle present";
  if (!m.is_free(m.start) || !m.is_free(m.exit)) return "start or exit in a wall";
  return {};
}

}  // namespace popgym::testing
