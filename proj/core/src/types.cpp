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

#include "popgym/types.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <string>

#include "popgym/errors.hpp"

namespace popgym {

std::string_view to_string(Difficulty d) {
  switch (d) {
    case Difficulty::Easy: return "Easy";
    case Difficulty::Medium: return "Medium";
    case Difficulty::Hard: return "Hard";
  }
  return "?";
}

Difficulty parse_difficulty(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "easy" || lower == "e") return Difficulty::Easy;
  if (lower == "medium" || lower == "m") return Difficulty::Medium;
  if (lower == "hard" || lower == "h") return Difficulty::Hard;
  throw InvalidConfig("unknown difficulty '" + std::string(text) + "'");
}

SpaceDescriptor SpaceDescriptor::discrete(std::int64_t n) {
  if (n < 2) throw InvalidConfig("Discrete space needs n >= 2");
  SpaceDescriptor s;
  s.kind_ = Kind::Discrete;
  s.cardinalities_ = {n};
  return s;
}

SpaceDescriptor SpaceDescriptor::multi_discrete(std::vector<std::int64_t> ns) {
  if (ns.empty() || std::any_of(ns.begin(), ns.end(), [](auto n) { return n < 2; })) {
    throw InvalidConfig("MultiDiscrete space needs every n >= 2");
  }
  SpaceDescriptor s;
  s.kind_ = Kind::MultiDiscrete;
  s.cardinalities_ = std::move(ns);
  return s;
}

SpaceDescriptor SpaceDescriptor::box(std::vector<double> low, std::vector<double> high) {
  if (low.size() != high.size() || low.empty()) {
    throw InvalidConfig("Box bounds must be non-empty and of equal length");
  }
  for (std::size_t i = 0; i < low.size(); ++i) {
    if (!(low[i] < high[i])) throw InvalidConfig("Box needs low < high in every dim");
  }
  SpaceDescriptor s;
  s.kind_ = Kind::Box;
  s.low_ = std::move(low);
  s.high_ = std::move(high);
  return s;
}

SpaceDescriptor SpaceDescriptor::box(std::size_t dims, double low, double high) {
  return box(std::vector<double>(dims, low), std::vector<double>(dims, high));
}

std::size_t SpaceDescriptor::flat_dim() const {
  switch (kind_) {
    case Kind::Discrete: return 1;
    case Kind::MultiDiscrete: return cardinalities_.size();
    case Kind::Box: return low_.size();
  }
  return 0;
}

bool SpaceDescriptor::contains(const std::vector<float>& values) const {
  if (values.size() != flat_dim()) return false;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (std::isnan(v)) return false;
    switch (kind_) {
      case Kind::Discrete:
      case Kind::MultiDiscrete:
        if (v < 0 || v >= static_cast<double>(cardinalities_[i]) || v != std::floor(v)) {
          return false;
        }
        break;
      case Kind::Box:
        if (v < low_[i] || v > high_[i]) return false;
        break;
    }
  }
  return true;
}

std::string SpaceDescriptor::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::Discrete:
      os << "Discrete(" << cardinalities_.front() << ")";
      break;
    case Kind::MultiDiscrete:
      os << "MultiDiscrete(";
      for (std::size_t i = 0; i < cardinalities_.size(); ++i) {
        os << (i ? "," : "") << cardinalities_[i];
      }
      os << ")";
      break;
    case Kind::Box:
      os << "Box(" << low_.size() << ")";
      break;
  }
  return os.str();
}

}  // namespace popgym
