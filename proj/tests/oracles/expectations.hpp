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

// Closed forms and exhaustive searches used as reference values.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace popgym::testing {

// Expected number of scored turns (pairs of selections) to clear a
// Concentration board of `pairs` pairs under optimal play with perfect
// memory. Expectimax over (unseen cards u, known unmatched singles k); the
// partner of every known single is unseen. A turn may open with an unseen or
// a known card and follow with either.
inline double concentration_optimal_turns(int pairs) {
  std::map<std::pair<int, int>, double> memo;
  const double inf = std::numeric_limits<double>::infinity();
  std::function<double(int, int)> e = [&](int u, int k) -> double {
    if (k < 0 || k > u || (u - k) % 2 != 0) return inf;
    if (u == 0) return 0.0;
    if (auto it = memo.find({u, k}); it != memo.end()) return it->second;
    const double du = u;
    double best = inf;
    // Open with an unseen card A.
    {
      double v = 0.0;
      if (k > 0) v += (k / du) * (1.0 + e(u - 1, k - 1));  // A pairs with a known card
      if (u - k > 0) {
        // A is new; follow with a known card (certain miss) or an unseen one.
        const double miss = 1.0 + e(u - 1, k + 1);
        double gamble = inf;
        if (u >= 2) {
          const double rest = u - 1.0;
          gamble = (1.0 / rest) * (1.0 + e(u - 2, k));
          if (k > 0) gamble += (k / rest) * (2.0 + e(u - 2, k));
          if (u - 2 - k > 0) gamble += ((u - 2.0 - k) / rest) * (1.0 + e(u - 2, k + 2));
        }
        v += ((u - k) / du) * std::min(k > 0 ? miss : inf, gamble);
      }
      best = std::min(best, v);
    }
    // Open with a known single X, follow with an unseen card B.
    if (k > 0) {
      double v = (1.0 / du) * (1.0 + e(u - 1, k - 1));
      if (k > 1) v += ((k - 1.0) / du) * (2.0 + e(u - 1, k - 1));
      if (u - k > 0) v += ((u - k) / du) * (1.0 + e(u - 1, k + 1));
      best = std::min(best, v);
    }
    memo[{u, k}] = best;
    return best;
  };
  return e(2 * pairs, 0);
}

// Exact expected return of a memoryless Higher Lower policy, by enumerating
// every distinct arrangement of a small shoe (ranks 0..R-1, c copies each).
// `guess_higher[r]` is the policy; scoring is +-1/(n-1), 0 on ties.
inline double enumerate_memoryless_higher_lower(int ranks, int copies,
                                                const std::vector<bool>& guess_higher) {
  std::vector<int> shoe;
  for (int r = 0; r < ranks; ++r) shoe.insert(shoe.end(), static_cast<std::size_t>(copies), r);
  const int n = static_cast<int>(shoe.size());
  double total = 0.0;
  long long arrangements = 0;
  do {
    int score = 0;
    for (int i = 0; i + 1 < n; ++i) {
      const int a = shoe[static_cast<std::size_t>(i)];
      const int b = shoe[static_cast<std::size_t>(i + 1)];
      if (a == b) continue;
      const bool higher = b > a;
      score += higher == guess_higher[static_cast<std::size_t>(a)] ? 1 : -1;
    }
    total += static_cast<double>(score) / (n - 1);
    ++arrangements;
  } while (std::next_permutation(shoe.begin(), shoe.end()));
  return total / static_cast<double>(arrangements);
}

// Best memoryless policy for a small shoe by trying all 2^R policies
// against the enumeration above.
inline std::pair<std::vector<bool>, double> best_memoryless_higher_lower(int ranks, int copies) {
  std::vector<bool> best;
  double best_value = -2.0;
  for (unsigned mask = 0; mask < (1U << ranks); ++mask) {
    std::vector<bool> policy(static_cast<std::size_t>(ranks));
    for (int r = 0; r < ranks; ++r) policy[static_cast<std::size_t>(r)] = (mask >> r) & 1U;
    const double v = enumerate_memoryless_higher_lower(ranks, copies, policy);
    if (v > best_value + 1e-12) {
      best_value = v;
      best = policy;
    }
  }
  return {best, best_value};
}

}  // namespace popgym::testing
