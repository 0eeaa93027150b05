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

namespace popgym {

// Emits per-step rewards as differences of a cumulative episode score.
//
// Each env tracks its score as an exact fraction of small integers and asks
// the ledger for the reward that moves the running total onto the rounded
// score. Summing the emitted rewards in order with doubles, starting from
// zero, reproduces total() bit for bit, and total() never leaves [-1, 1].
class RewardLedger {
 public:
  void reset() { total_ = 0.0; }
  double total() const { return total_; }

  // Moves the total to numerator / denominator. denominator > 0.
  double emit_fraction(std::int64_t numerator, std::int64_t denominator) {
    return emit(static_cast<double>(numerator) / static_cast<double>(denominator));
  }

  double emit(double target);

 private:
  double total_ = 0.0;
};

}  // namespace popgym
