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

#include "exmon/lang/query.hpp"

#include "exmon/core/error.hpp"

namespace exmon::lang {

QueryPredicate::QueryPredicate(std::vector<QueryTerm> terms) : terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.weight.sign() < 0) throw DomainError("query weight " + t.weight.to_string() + " is negative");
    bound_ += t.weight;
  }
  if (bound_ > Rational(1)) throw DomainError("query weights sum to " + bound_.to_string() + ", above 1");
}

QueryPredicate QueryPredicate::constant(const Rational& r) { return QueryPredicate({{r, nullptr}}); }

QueryPredicate QueryPredicate::indicator(BoolPtr condition) { return QueryPredicate({{Rational(1), std::move(condition)}}); }

Rational QueryPredicate::operator()(const Valuation& values) const {
  Rational out;
  for (const auto& t : terms_) {
    if (!t.condition || eval(*t.condition, values)) out += t.weight;
  }
  return out;
}

std::vector<Rational> QueryPredicate::table(const StateSpace& space) const {
  std::vector<Rational> out;
  out.reserve(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) out.push_back((*this)(space.values(i)));
  return out;
}

std::string QueryPredicate::to_source(const Decls& decls) const {
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) out += " + ";
    const auto& t = terms_[i];
    if (!t.condition) {
      out += t.weight.to_string();
    } else {
      out += t.weight.to_string() + "*[" + lang::to_source(*t.condition, decls) + "]";
    }
  }
  return out.empty() ? "0/1" : out;
}

}  // namespace exmon::lang
