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

#include "popgym/envs/maze.hpp"

#include <algorithm>
#include <string>

#include "popgym/errors.hpp"

namespace popgym {

Maze::Maze(int width, int height)
    : width_(width),
      height_(height),
      walls_(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), 1) {}

Maze Maze::from_rows(const std::vector<std::string>& rows) {
  if (rows.empty() || rows.front().empty()) throw InvalidDimensions("empty maze");
  Maze maze(static_cast<int>(rows.front().size()), static_cast<int>(rows.size()));
  for (int r = 0; r < maze.height_; ++r) {
    const std::string& line = rows[static_cast<std::size_t>(r)];
    if (static_cast<int>(line.size()) != maze.width_) throw InvalidDimensions("ragged maze rows");
    for (int c = 0; c < maze.width_; ++c) {
      const char ch = line[static_cast<std::size_t>(c)];
      maze.set_wall(r, c, ch == '#');
      if (ch == 'S') maze.start = {r, c};
      if (ch == 'E') maze.exit = {r, c};
    }
  }
  return maze;
}

int Maze::free_count() const {
  return static_cast<int>(std::count(walls_.begin(), walls_.end(), std::uint8_t{0}));
}

int Maze::corridor_edges() const {
  int edges = 0;
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) {
      if (is_wall(r, c)) continue;
      edges += is_wall(r, c + 1) ? 0 : 1;
      edges += is_wall(r + 1, c) ? 0 : 1;
    }
  }
  return edges;
}

std::string Maze::to_string() const {
  std::string out;
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) {
      const GridPos p{r, c};
      out += p == start ? 'S' : p == exit ? 'E' : is_wall(r, c) ? '#' : '.';
    }
    out += '\n';
  }
  return out;
}

std::vector<int> bfs_distances(const Maze& maze, GridPos from) {
  std::vector<int> dist(static_cast<std::size_t>(maze.width()) * static_cast<std::size_t>(maze.height()), -1);
  if (!maze.is_free(from)) return dist;
  std::vector<GridPos> frontier{from};
  dist[maze.index(from)] = 0;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    const GridPos p = frontier[head];
    for (int m = 0; m < 4; ++m) {
      const GridPos q{p.row + kMoveRow[m], p.col + kMoveCol[m]};
      if (maze.is_free(q) && dist[maze.index(q)] < 0) {
        dist[maze.index(q)] = dist[maze.index(p)] + 1;
        frontier.push_back(q);
      }
    }
  }
  return dist;
}

Maze generate_maze(int width, int height, EpisodeSeed seed) {
  Pcg32 rng = rng_stream(seed, streams::kLevel);
  return generate_maze(width, height, rng);
}

Maze generate_maze(int width, int height, Pcg32& rng) {
  if (width < 5 || height < 5 || width % 2 == 0 || height % 2 == 0) {
    throw InvalidDimensions("maze dimensions must be odd and >= 5, got " +
                            std::to_string(width) + "x" + std::to_string(height));
  }
  Maze maze(width, height);
  const int room_cols = (width - 1) / 2;
  const int room_rows = (height - 1) / 2;
  const auto room_pos = [](int room_r, int room_c) { return GridPos{2 * room_r + 1, 2 * room_c + 1}; };

  std::vector<std::uint8_t> seen(static_cast<std::size_t>(room_rows * room_cols), 0);
  const auto room_id = [room_cols](int r, int c) { return static_cast<std::size_t>(r * room_cols + c); };

  const int start_room = static_cast<int>(rng.below(static_cast<std::uint32_t>(room_rows * room_cols)));
  const int sr = start_room / room_cols;
  const int sc = start_room % room_cols;

  struct Frame {
    int r;
    int c;
  };
  std::vector<Frame> stack{{sr, sc}};
  seen[room_id(sr, sc)] = 1;
  maze.set_wall(room_pos(sr, sc).row, room_pos(sr, sc).col, false);

  while (!stack.empty()) {
    const Frame top = stack.back();
    int options[4];
    int count = 0;
    for (int m = 0; m < 4; ++m) {
      const int nr = top.r + kMoveRow[m];
      const int nc = top.c + kMoveCol[m];
      if (nr >= 0 && nr < room_rows && nc >= 0 && nc < room_cols && !seen[room_id(nr, nc)]) {
        options[count++] = m;
      }
    }
    if (count == 0) {
      stack.pop_back();
      continue;
    }
    const int m = options[rng.below(static_cast<std::uint32_t>(count))];
    const int nr = top.r + kMoveRow[m];
    const int nc = top.c + kMoveCol[m];
    const GridPos from = room_pos(top.r, top.c);
    maze.set_wall(from.row + kMoveRow[m], from.col + kMoveCol[m], false);
    maze.set_wall(from.row + 2 * kMoveRow[m], from.col + 2 * kMoveCol[m], false);
    seen[room_id(nr, nc)] = 1;
    stack.push_back({nr, nc});
  }

  maze.start = room_pos(sr, sc);
  const std::vector<int> dist = bfs_distances(maze, maze.start);
  const auto farthest = std::max_element(dist.begin(), dist.end());
  const auto idx = static_cast<int>(farthest - dist.begin());
  maze.exit = {idx / width, idx % width};
  return maze;
}

}  // namespace popgym
