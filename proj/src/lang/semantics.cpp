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

#include "exmon/lang/semantics.hpp"

#include <algorithm>
#include <map>

#include "exmon/core/error.hpp"

namespace exmon::lang {

SubExpectation::SubExpectation(std::vector<std::pair<std::size_t, Rational>> weights) {
  std::sort(weights.begin(), weights.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [state, w] : weights) {
    if (w.sign() < 0) throw DomainError("sub-expectation weight " + w.to_string() + " is negative");
    if (!weights_.empty() && weights_.back().first == state) throw DomainError("sub-expectation repeats a state");
    if (w.is_zero()) continue;
    mass_ += w;
    weights_.emplace_back(state, std::move(w));
  }
  if (mass_ > Rational(1)) throw DomainError("sub-expectation mass " + mass_.to_string() + " exceeds 1");
}

SubExpectation SubExpectation::dirac(std::size_t state) { return SubExpectation({{state, Rational(1)}}); }

Rational SubExpectation::weight(std::size_t state) const {
  auto it = std::lower_bound(weights_.begin(), weights_.end(), state, [](const auto& e, std::size_t s) { return e.first < s; });
  return it != weights_.end() && it->first == state ? it->second : Rational();
}

Rational SubExpectation::integrate(const std::function<Rational(std::size_t)>& q) const {
  Rational out;
  for (const auto& [state, w] : weights_) out += w * q(state);
  return out;
}

monads::Expectation SubExpectation::to_expectation(const StateSpace& space) const {
  if (mass_ != Rational(1)) throw DomainError("sub-expectation has mass " + mass_.to_string() + ", not 1");
  std::vector<Rational> dense(space.size());
  for (const auto& [state, w] : weights_) dense.at(state) = w;
  return monads::Expectation(space.atoms(), std::move(dense));
}

Transformer::Transformer(std::shared_ptr<const StateSpace> space, std::vector<Row> rows)
    : space_(std::move(space)), rows_(std::move(rows)) {
  if (rows_.size() != space_->size()) throw DomainError("transformer needs one row per state");
}

const SubExpectation& Transformer::at(std::size_t state) const {
  const Row& r = row(state);
  if (r.error) throw RuntimeError(*r.error);
  return r.value;
}

Transformer identity_transformer(std::shared_ptr<const StateSpace> space) {
  std::vector<Row> rows(space->size());
  for (std::size_t s = 0; s < rows.size(); ++s) rows[s].value = SubExpectation::dirac(s);
  return Transformer(std::move(space), std::move(rows));
}

namespace {

Row error_row(std::string message) {
  Row r;
  r.error = std::move(message);
  return r;
}

/// Sum of w_i * rows_i, or the first error reached with positive weight.
Row combine(const std::vector<std::pair<Rational, const Row*>>& parts) {
  std::map<std::size_t, Rational> acc;
  for (const auto& [w, r] : parts) {
    if (w.is_zero()) continue;
    if (r->error) return *r;
    for (const auto& [t, v] : r->value.weights()) acc[t] += w * v;
  }
  Row out;
  out.value = SubExpectation(std::vector<std::pair<std::size_t, Rational>>(acc.begin(), acc.end()));
  return out;
}

Row compose_row(const Row& r, const Transformer& g) {
  if (r.error) return r;
  std::vector<std::pair<Rational, const Row*>> parts;
  parts.reserve(r.value.weights().size());
  for (const auto& [t, w] : r.value.weights()) parts.emplace_back(w, &g.row(t));
  return combine(parts);
}

/// Guard value per state; an evaluation error poisons the state.
struct GuardTable {
  std::vector<char> value;
  std::vector<std::optional<std::string>> error;
};

GuardTable evaluate_guard(const BoolExpr& guard, const StateSpace& space) {
  GuardTable t{std::vector<char>(space.size(), 0), std::vector<std::optional<std::string>>(space.size())};
  for (std::size_t s = 0; s < space.size(); ++s) {
    try {
      t.value[s] = eval(guard, space.values(s)) ? 1 : 0;
    } catch (const RuntimeError& e) {
      t.error[s] = "guard " + to_source(guard, space.decls()) + " at state " + space.label(s) + ": " + e.what();
    }
  }
  return t;
}

void check_monotone(const Row& before, const Row& after, std::size_t state, std::size_t k, const StateSpace& space) {
  if (after.error) return;
  if (before.error) throw Error("loop chain regressed from an error at state " + space.label(state));
  const auto& b = before.value.weights();
  const auto& a = after.value.weights();
  std::size_t j = 0;
  for (const auto& [t, w] : b) {
    while (j < a.size() && a[j].first < t) ++j;
    if (j == a.size() || a[j].first != t || a[j].second < w) {
      throw Error("loop chain not monotone at state " + space.label(state) + " after iteration " + std::to_string(k));
    }
  }
}

}  // namespace

Transformer compose(const Transformer& f, const Transformer& g) {
  if (!(f.space().decls().size() == g.space().decls().size() && f.size() == g.size())) {
    throw DomainError("composing transformers over different state spaces");
  }
  std::vector<Row> rows;
  rows.reserve(f.size());
  for (const auto& r : f.rows()) rows.push_back(compose_row(r, g));
  return Transformer(f.space_ptr(), std::move(rows));
}

LoopResult loop_semantics(const BoolExpr& guard, const Transformer& body, const LoopOptions& options) {
  if (options.max_iter < 1) throw DomainError("loop needs max_iter >= 1");
  if (options.tol.sign() < 0 || options.tol >= Rational(1)) throw DomainError("loop tolerance must lie in [0,1)");
  const StateSpace& space = body.space();
  const GuardTable g = evaluate_guard(guard, space);

  // Approximant allowing k body executions: guard-false states exit, the
  // rest run the body once and continue with the previous approximant.
  auto step = [&](const Transformer* previous) {
    std::vector<Row> rows(space.size());
    for (std::size_t s = 0; s < space.size(); ++s) {
      if (g.error[s]) {
        rows[s] = error_row(*g.error[s]);
      } else if (!g.value[s]) {
        rows[s].value = SubExpectation::dirac(s);
      } else if (previous != nullptr) {
        rows[s] = compose_row(body.row(s), *previous);
      }
    }
    return Transformer(body.space_ptr(), std::move(rows));
  };

  Transformer current = step(nullptr);
  std::vector<Rational> residuals(space.size());
  std::size_t k = 0;
  while (k < options.max_iter) {
    Transformer next = step(&current);
    ++k;
    Rational worst;
    for (std::size_t s = 0; s < space.size(); ++s) {
      check_monotone(current.row(s), next.row(s), s, k, space);
      residuals[s] = next.row(s).error ? Rational() : next.row(s).value.residual();
      worst = max(worst, residuals[s]);
    }
    current = std::move(next);
    if (options.on_iteration) options.on_iteration(k, current);
    if (worst <= options.tol) break;
  }
  return LoopResult{std::move(current), k, std::move(residuals)};
}

namespace {

Denotation denote_stmt(const Stmt& s, const std::shared_ptr<const StateSpace>& space, const LoopOptions& options) {
  const StateSpace& sp = *space;
  switch (s.kind) {
    case Stmt::Kind::Skip:
      return {identity_transformer(space), 0};
    case Stmt::Kind::DetAssign: {
      const VarDecl& d = sp.decls().at(s.var);
      std::vector<Row> rows(sp.size());
      for (std::size_t st = 0; st < sp.size(); ++st) {
        const std::string where = "assignment " + d.name + " := " + to_source(*s.expr, sp.decls()) + " at state " + sp.label(st);
        try {
          const std::int64_t v = eval(*s.expr, sp.values(st));
          if (!d.contains(v)) {
            rows[st] = error_row(where + " yields " + std::to_string(v) + ", outside " + std::to_string(d.lo) + ".." +
                                 std::to_string(d.hi));
          } else {
            rows[st].value = SubExpectation::dirac(sp.with(st, s.var, v));
          }
        } catch (const RuntimeError& e) {
          rows[st] = error_row(where + ": " + e.what());
        }
      }
      return {Transformer(space, std::move(rows)), 0};
    }
    case Stmt::Kind::ProbAssign: {
      const VarDecl& d = sp.decls().at(s.var);
      for (const auto& [v, _] : s.dist) {
        if (!d.contains(v)) throw DomainError("distribution value " + std::to_string(v) + " outside the range of " + d.name);
      }
      std::vector<Row> rows(sp.size());
      for (std::size_t st = 0; st < sp.size(); ++st) {
        std::vector<std::pair<std::size_t, Rational>> w;
        w.reserve(s.dist.size());
        for (const auto& [v, r] : s.dist) w.emplace_back(sp.with(st, s.var, v), r);
        rows[st].value = SubExpectation(std::move(w));
      }
      return {Transformer(space, std::move(rows)), 0};
    }
    case Stmt::Kind::Seq: {
      Denotation a = denote_stmt(*s.first, space, options);
      Denotation b = denote_stmt(*s.second, space, options);
      return {compose(a.transformer, b.transformer), std::max(a.iterations, b.iterations)};
    }
    case Stmt::Kind::If: {
      Denotation a = denote_stmt(*s.first, space, options);
      Denotation b = denote_stmt(*s.second, space, options);
      const GuardTable g = evaluate_guard(*s.guard, sp);
      std::vector<Row> rows(sp.size());
      for (std::size_t st = 0; st < sp.size(); ++st) {
        if (g.error[st]) {
          rows[st] = error_row(*g.error[st]);
        } else {
          rows[st] = g.value[st] ? a.transformer.row(st) : b.transformer.row(st);
        }
      }
      return {Transformer(space, std::move(rows)), std::max(a.iterations, b.iterations)};
    }
    case Stmt::Kind::Choose: {
      std::vector<Denotation> parts;
      std::size_t iterations = 0;
      for (const auto& [_, b] : s.branches) {
        parts.push_back(denote_stmt(*b, space, options));
        iterations = std::max(iterations, parts.back().iterations);
      }
      std::vector<Row> rows(sp.size());
      for (std::size_t st = 0; st < sp.size(); ++st) {
        std::vector<std::pair<Rational, const Row*>> terms;
        for (std::size_t i = 0; i < parts.size(); ++i) terms.emplace_back(s.branches[i].first, &parts[i].transformer.row(st));
        rows[st] = combine(terms);
      }
      return {Transformer(space, std::move(rows)), iterations};
    }
    case Stmt::Kind::While: {
      Denotation body = denote_stmt(*s.first, space, options);
      LoopResult r = loop_semantics(*s.guard, body.transformer, options);
      return {std::move(r.transformer), std::max(r.iterations, body.iterations)};
    }
  }
  throw Error("unknown statement kind");
}

}  // namespace

Denotation denote(const Stmt& s, std::shared_ptr<const StateSpace> space, const LoopOptions& options) {
  return denote_stmt(s, space, options);
}

Denotation denote(const Program& p, const LoopOptions& options) {
  return denote(*p.body, std::make_shared<const StateSpace>(p.decls), options);
}

WpResult wp(const Denotation& d, const QueryPredicate& q, const InitialDistribution& init) {
  const StateSpace& space = d.transformer.space();
  Rational total;
  for (const auto& [s, w] : init) {
    if (w.sign() <= 0) throw DomainError("initial weight " + w.to_string() + " is not positive");
    if (s >= space.size()) throw DomainError("initial state out of range");
    total += w;
  }
  if (total != Rational(1)) throw DomainError("initial weights sum to " + total.to_string() + ", not 1");
  WpResult out;
  Rational mass;
  auto query_at = [&](std::size_t t) { return q(space.values(t)); };
  for (const auto& [s, w] : init) {
    const SubExpectation& e = d.transformer.at(s);
    out.lo += w * e.integrate(query_at);
    mass += w * e.mass();
  }
  out.residual = Rational(1) - mass;
  out.hi = out.lo + out.residual;
  out.iterations = d.iterations;
  return out;
}

WpResult wp(const Program& p, const QueryPredicate& q, const Valuation& init, const LoopOptions& options) {
  const Denotation d = denote(p, options);
  return wp(d, q, {{d.transformer.space().index(init), Rational(1)}});
}

nlohmann::ordered_json to_json(const WpResult& r) {
  nlohmann::ordered_json j;
  j["lo"] = r.lo.to_string();
  j["hi"] = r.hi.to_string();
  j["iterations"] = r.iterations;
  j["residual"] = r.residual.to_string();
  return j;
}

}  // namespace exmon::lang
