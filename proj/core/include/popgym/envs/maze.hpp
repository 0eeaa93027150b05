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
#include <string>
#include <vector>

#include "popgym/rng.hpp"
#include "popgym/types.hpp"

namespace popgym {

struct GridPos {
  int row = 0;
  int col = 0;
  friend bool operator==(const GridPos&, const GridPos&) = default;
};

// Wall/free grid with a start cell and an exit cell. Cells outside the grid
// read as walls.
class Maze {
 public:
  Maze() = default;
  Maze(int width, int height);
  // Rows of '#' (wall) and '.' (free); 'S' and 'E' mark free start/exit.
  static Maze from_rows(const std::vector<std::string>& rows);

  int width() const { return width_; }
  int height() const { return height_; }
  bool is_wall(int row, int col) const {
    if (row < 0 || row >= height_ || col < 0 || col >= width_) return true;
    return walls_[index(row, col)] != 0;
  }
  bool is_free(GridPos p) const { return !is_wall(p.row, p.col); }
  void set_wall(int row, int col, bool wall) { walls_[index(row, col)] = wall ? 1 : 0; }
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(col);
  }
  std::size_t index(GridPos p) const { return index(p.row, p.col); }

  int free_count() const;
  // Pairs of 4-adjacent free cells.
  int corridor_edges() const;

  GridPos start;
  GridPos exit;

  std::string to_string() const;
  friend bool operator==(const Maze&, const Maze&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> walls_;
};

// Unit moves indexed like the Labyrinth action space: N, E, S, W.
inline constexpr int kMoveRow[4] = {-1, 0, 1, 0};
inline constexpr int kMoveCol[4] = {0, 1, 0, -1};

// BFS distance from `from` to every cell, -1 where unreachable.
std::vector<int> bfs_distances(const Maze& maze, GridPos from);

// Perfect maze by randomized depth-first carving. Rooms sit at odd
// coordinates; the outer ring stays wall. Start is a uniformly chosen room;
// exit is the free cell farthest from start by BFS (first in row-major order
// on ties). Throws InvalidDimensions unless width and height are odd and
// at least 5.
Maze generate_maze(int width, int height, EpisodeSeed seed);
Maze generate_maze(int width, int height, Pcg32& rng);

}  // namespace popgym
