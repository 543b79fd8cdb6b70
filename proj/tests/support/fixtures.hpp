// Copyright 2026 The exmon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "exmon/effect/instance.hpp"

// Deliberately broken instances and brute-force oracles shared by the unit
// and acceptance suites.
namespace exmon::testing {

/// The unit interval with min in place of the partial sum.
inline effect::EffectAlgebraInstance min_sum_interval() {
  auto broken = effect::catalog::unit_interval();
  broken.name = "UnitInterval[osum=min]";
  broken.osum = [](const effect::Element& x, const effect::Element& y) -> std::optional<effect::Element> {
    return effect::Element{{exmon::min(x.coords[0], y.coords[0])}};
  };
  return broken;
}

/// The unit-interval module with r.x = r^2 x.
inline effect::EffectModuleInstance squared_action_interval_module() {
  auto broken = effect::catalog::unit_interval_module();
  broken.algebra.name = "UnitInterval[r^2 action]";
  broken.act = [](const UnitScalar& r, const effect::Element& x) {
    return effect::Element{{r.value() * r.value() * x.coords[0]}};
  };
  return broken;
}

// Brute-force congruence on formal sums over Chain(n): multisets of nonzero
// chain elements with at most `max_summands` entries, closed under
// [x, y] ~ [x (+) y] whenever x + y <= n. Returns the class id per multiset.
// Only sums of total <= max_summands are conclusive: their all-ones
// expansion still fits under the size bound, so no connecting path is cut.
struct CongruenceOracle {
  using Sum = std::vector<int>;  // sorted
  std::map<Sum, int> index;
  std::vector<Sum> sums;
  std::vector<int> parent;

  int find(int i) { return parent[i] == i ? i : parent[i] = find(parent[i]); }
  void unite(int a, int b) { parent[find(a)] = find(b); }

  void enumerate(Sum& cur, int from, int n, int left) {
    index.emplace(cur, static_cast<int>(sums.size()));
    sums.push_back(cur);
    if (left == 0) return;
    for (int g = from; g <= n; ++g) {
      cur.push_back(g);
      enumerate(cur, g, n, left - 1);
      cur.pop_back();
    }
  }

  CongruenceOracle(int n, int max_summands) {
    Sum cur;
    enumerate(cur, 1, n, max_summands);
    parent.resize(sums.size());
    std::iota(parent.begin(), parent.end(), 0);
    for (std::size_t s = 0; s < sums.size(); ++s) {
      const Sum& f = sums[s];
      for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
          if (f[i] + f[j] > n) continue;
          Sum merged;
          for (std::size_t k = 0; k < f.size(); ++k) {
            if (k != i && k != j) merged.push_back(f[k]);
          }
          merged.push_back(f[i] + f[j]);
          std::sort(merged.begin(), merged.end());
          unite(static_cast<int>(s), index.at(merged));
        }
      }
    }
  }
};

/// Checks that the oracle's classes over Chain(n) are exactly the totals
/// 0..max_summands, which is the natural-number normal form.
inline bool congruence_matches_totals(int n, int max_summands) {
  CongruenceOracle oracle(n, max_summands);
  std::map<int, int> class_of_total;
  std::map<int, int> total_of_class;
  for (std::size_t s = 0; s < oracle.sums.size(); ++s) {
    const int total = std::accumulate(oracle.sums[s].begin(), oracle.sums[s].end(), 0);
    if (total > max_summands) continue;
    const int cls = oracle.find(static_cast<int>(s));
    if (class_of_total.emplace(total, cls).first->second != cls) return false;
    if (total_of_class.emplace(cls, total).first->second != total) return false;
  }
  return class_of_total.size() == static_cast<std::size_t>(max_summands) + 1;
}

}  // namespace exmon::testing
