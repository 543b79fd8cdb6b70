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

#include <string>
#include <vector>

#include "exmon/core/rational.hpp"
#include "exmon/lang/ast.hpp"
#include "exmon/lang/state_space.hpp"

namespace exmon::lang {

/// weight * [condition], or a bare constant when condition is null.
struct QueryTerm {
  Rational weight;
  BoolPtr condition;
};

/// q(s) = sum_i w_i [b_i](s). Nonnegative weights summing to at most 1
/// place q(s) in [0,1] for every state.
class QueryPredicate {
 public:
  /// Throws DomainError on a negative weight or a weight sum above 1.
  explicit QueryPredicate(std::vector<QueryTerm> terms);
  static QueryPredicate constant(const Rational& r);
  static QueryPredicate indicator(BoolPtr condition);

  const std::vector<QueryTerm>& terms() const { return terms_; }
  /// Sum of the weights; an upper bound on q.
  const Rational& bound() const { return bound_; }

  Rational operator()(const Valuation& values) const;
  /// q at every state of the space, by index.
  std::vector<Rational> table(const StateSpace& space) const;

  std::string to_source(const Decls& decls) const;

 private:
  std::vector<QueryTerm> terms_;
  Rational bound_;
};

}  // namespace exmon::lang
