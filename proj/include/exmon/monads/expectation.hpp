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
#include <vector>

#include <json.hpp>

#include "exmon/core/finset.hpp"
#include "exmon/core/rational.hpp"
#include "exmon/effect/predicate.hpp"
#include "exmon/monads/dist.hpp"

namespace exmon::monads {

/// Row-major table of exact weights; rows index inputs, columns outputs.
using WeightMatrix = std::vector<std::vector<Rational>>;

/// (F;G)[x][z] = sum_y F[x][y] G[y][z].
WeightMatrix matrix_product(const WeightMatrix& f, const WeightMatrix& g);

/// An effect-module map [0,1]^X -> [0,1] on a finite X, stored by its
/// values on the point predicates: h(p) = sum_x w_x p(x), with w_x >= 0 and
/// sum w_x = 1.
class Expectation {
 public:
  Expectation(FinSet domain, std::vector<Rational> weights);

  const FinSet& domain() const { return domain_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const Rational& weight(std::size_t atom) const { return weights_[atom]; }

  friend bool operator==(const Expectation& a, const Expectation& b);

 private:
  FinSet domain_;
  std::vector<Rational> weights_;
};

Expectation exp_unit(std::size_t atom, const FinSet& domain);
Expectation exp_unit(const std::string& atom, const FinSet& domain);

/// sum_x w_x p(x); domain mismatch throws.
UnitScalar exp_eval(const Expectation& h, const effect::Predicate& p);

/// The monad map D => E at X.
Expectation sigma(const Dist& phi);
/// Inverse of sigma on a finite X.
Dist sigma_inverse(const Expectation& h);

/// An opaque functional [0,1]^X -> [0,1]: the continuation-monad face.
using RawFunctional = std::function<UnitScalar(const effect::Predicate&)>;
RawFunctional embed_continuation(const Expectation& h);

/// A program-as-function X -> E(Y).
class KleisliMap {
 public:
  KleisliMap(FinSet domain, FinSet codomain, std::vector<Expectation> rows);
  /// Throws DomainError unless each row is a valid expectation.
  static KleisliMap from_matrix(FinSet domain, FinSet codomain, const WeightMatrix& m);
  /// The unit X -> E(X).
  static KleisliMap identity(const FinSet& domain);

  const FinSet& domain() const { return domain_; }
  const FinSet& codomain() const { return codomain_; }
  const Expectation& operator()(std::size_t x) const { return rows_[x]; }
  const std::vector<Expectation>& rows() const { return rows_; }
  WeightMatrix matrix() const;

  friend bool operator==(const KleisliMap& a, const KleisliMap& b);

 private:
  FinSet domain_;
  FinSet codomain_;
  std::vector<Expectation> rows_;
};

/// (f;g)(x)(q) = f(x)(lambda y. g(y)(q)).
KleisliMap kleisli_compose(const KleisliMap& f, const KleisliMap& g);

/// Pointwise convex combination; the multiplication of E on sigma-images
/// of finitely supported second-order states.
Expectation mix_states(const Convex<Expectation>& states);

/// sum_i r_i v_i: the barycenter of a finite distribution on [0,1].
UnitScalar barycenter(const Convex<UnitScalar>& phi);

/// q(t) = slope.t + intercept, mapping [0,1] into [0,1]
/// (intercept and slope + intercept both in [0,1]).
struct AffineMap {
  Rational slope;
  Rational intercept;

  static AffineMap make(Rational slope, Rational intercept);
  UnitScalar operator()(const UnitScalar& t) const;
};

/// E(2) ~ [0,1]: the weight of the first atom. Throws unless |X| = 2.
UnitScalar exp2_iso(const Expectation& h);
Expectation exp2_iso_inverse(const UnitScalar& r, const FinSet& two);

/// {"atom": "num/den"} over every atom, zero weights included.
nlohmann::ordered_json to_json(const Expectation& h);
Expectation expectation_from_json(const nlohmann::ordered_json& j);

}  // namespace exmon::monads
