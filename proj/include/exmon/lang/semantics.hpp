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
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "exmon/core/rational.hpp"
#include "exmon/lang/ast.hpp"
#include "exmon/lang/errors.hpp"
#include "exmon/lang/query.hpp"
#include "exmon/lang/state_space.hpp"
#include "exmon/monads/expectation.hpp"

namespace exmon::lang {

/// Sparse nonnegative weights over state indices with mass <= 1; the
/// deficit 1 - mass is the probability of not terminating.
class SubExpectation {
 public:
  SubExpectation() = default;
  /// Entries are sorted by state and zero weights dropped. Throws DomainError
  /// on negative weights, repeated states or mass above 1.
  explicit SubExpectation(std::vector<std::pair<std::size_t, Rational>> weights);
  static SubExpectation dirac(std::size_t state);

  const std::vector<std::pair<std::size_t, Rational>>& weights() const { return weights_; }
  Rational weight(std::size_t state) const;
  const Rational& mass() const { return mass_; }
  Rational residual() const { return Rational(1) - mass_; }

  /// sum_t w_t q(t), with q given by the query's value at each reached state.
  Rational integrate(const std::function<Rational(std::size_t)>& q) const;

  /// The total case; throws DomainError unless mass is exactly 1.
  monads::Expectation to_expectation(const StateSpace& space) const;

  friend bool operator==(const SubExpectation& a, const SubExpectation& b) { return a.weights_ == b.weights_; }

 private:
  std::vector<std::pair<std::size_t, Rational>> weights_;
  Rational mass_;
};

/// Either a sub-expectation or the runtime error raised on reaching the state.
struct Row {
  SubExpectation value;
  std::optional<std::string> error;

  friend bool operator==(const Row& a, const Row& b) { return a.value == b.value && a.error == b.error; }
};

/// A state-indexed sub-expectation transformer S -> E_sub(S). Immutable;
/// concurrent reads are safe.
class Transformer {
 public:
  Transformer(std::shared_ptr<const StateSpace> space, std::vector<Row> rows);

  const StateSpace& space() const { return *space_; }
  const std::shared_ptr<const StateSpace>& space_ptr() const { return space_; }
  std::size_t size() const { return rows_.size(); }
  const Row& row(std::size_t state) const { return rows_.at(state); }
  const std::vector<Row>& rows() const { return rows_; }
  /// Throws RuntimeError when the state's row is an error.
  const SubExpectation& at(std::size_t state) const;

  friend bool operator==(const Transformer& a, const Transformer& b) { return a.rows_ == b.rows_; }

 private:
  std::shared_ptr<const StateSpace> space_;
  std::vector<Row> rows_;
};

Transformer identity_transformer(std::shared_ptr<const StateSpace> space);
/// (f;g)(s) = sum_t f(s)(t) g(t). A row of f that reaches an error row of
/// g with positive weight becomes that error.
Transformer compose(const Transformer& f, const Transformer& g);

struct LoopOptions {
  /// Maximum number of body unrollings per loop; at least 1.
  std::size_t max_iter = 100;
  /// Stop once every state's residual is <= tol; 0 <= tol < 1.
  Rational tol;
  /// Observes each approximant W_k, k = 1..iterations.
  std::function<void(std::size_t, const Transformer&)> on_iteration;
};

struct LoopResult {
  Transformer transformer;
  /// Body unrollings performed.
  std::size_t iterations = 0;
  /// 1 - mass per state; zero for error rows.
  std::vector<Rational> residuals;
};

/// Kleene iteration of W -> (if guard then body ; W else skip). W_k allows
/// at most k executions of the body, so it is exact on runs that exit within
/// k rounds. Every weight is checked to be nondecreasing in k.
LoopResult loop_semantics(const BoolExpr& guard, const Transformer& body, const LoopOptions& options);

struct Denotation {
  Transformer transformer;
  /// Largest iteration count over the loops in the program; 0 when loop-free.
  std::size_t iterations = 0;
};

Denotation denote(const Stmt& s, std::shared_ptr<const StateSpace> space, const LoopOptions& options = {});
Denotation denote(const Program& p, const LoopOptions& options = {});

/// Positive weights summing to 1 over state indices.
using InitialDistribution = std::vector<std::pair<std::size_t, Rational>>;

struct WpResult {
  Rational lo;
  Rational hi;
  std::size_t iterations = 0;
  /// Non-termination mass from the initial distribution; hi - lo.
  Rational residual;
};

/// lo = sum_s init(s) W(s)(q), hi = lo + (1 - mass). Read-only on `d`.
WpResult wp(const Denotation& d, const QueryPredicate& q, const InitialDistribution& init);
WpResult wp(const Program& p, const QueryPredicate& q, const Valuation& init, const LoopOptions& options = {});

/// {"lo":"n/d","hi":"n/d","iterations":k,"residual":"n/d"}
nlohmann::ordered_json to_json(const WpResult& r);

}  // namespace exmon::lang
