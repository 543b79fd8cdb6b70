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

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "exmon/core/error.hpp"
#include "exmon/core/finset.hpp"
#include "exmon/core/rational.hpp"

namespace exmon::monads {

/// A finite-support distribution on a FinSet: strictly positive weights on
/// its support, summing to exactly 1.
class Dist {
 public:
  /// Dense weights, one per atom; zeros are dropped, negatives rejected.
  Dist(FinSet domain, const std::vector<Rational>& weights);
  static Dist from_pairs(FinSet domain, const std::vector<std::pair<std::string, Rational>>& weights);

  const FinSet& domain() const { return domain_; }
  /// (atom index, weight) ascending by index.
  const std::vector<std::pair<std::size_t, Rational>>& support() const { return support_; }
  Rational weight(std::size_t atom) const;
  std::vector<Rational> dense() const;

  friend bool operator==(const Dist& a, const Dist& b);

 private:
  FinSet domain_;
  std::vector<std::pair<std::size_t, Rational>> support_;
};

Dist dist_unit(std::size_t atom, const FinSet& domain);
Dist dist_unit(const std::string& atom, const FinSet& domain);

/// A formal convex combination sum_i r_i . t_i with r_i > 0, sum r_i = 1.
/// Repeated t_i are allowed; operations are linear so they never need merging.
template <class T>
struct Convex {
  std::vector<std::pair<Rational, T>> terms;

  static Convex of(std::vector<std::pair<Rational, T>> terms) {
    Convex c{std::move(terms)};
    c.validate();
    return c;
  }
  static Convex point(T value) { return Convex{{{Rational(1), std::move(value)}}}; }

  void validate() const {
    Rational total;
    if (terms.empty()) throw DomainError("convex combination with no terms");
    for (const auto& [w, _] : terms) {
      if (w <= Rational(0)) throw DomainError("convex weight " + w.to_string() + " is not positive");
      total += w;
    }
    if (total != Rational(1)) throw DomainError("convex weights sum to " + total.to_string() + ", not 1");
  }
};

/// The functor action on convex combinations.
template <class T, class F>
auto map_convex(const Convex<T>& c, F&& f) -> Convex<decltype(f(c.terms.front().second))> {
  Convex<decltype(f(c.terms.front().second))> out;
  out.terms.reserve(c.terms.size());
  for (const auto& [w, t] : c.terms) out.terms.emplace_back(w, f(t));
  return out;
}

/// mu(Psi)(y) = sum_phi Psi(phi) . phi(y).
Dist dist_mu(const Convex<Dist>& psi);

/// Kleisli extension: sum_x d(x) . f(x).
Dist dist_bind(const Dist& d, const std::function<Dist(std::size_t)>& f);

nlohmann::ordered_json to_json(const Dist& d);
/// Atoms are the object keys, in order; every atom must carry a weight.
Dist dist_from_json(const nlohmann::ordered_json& j);

}  // namespace exmon::monads
