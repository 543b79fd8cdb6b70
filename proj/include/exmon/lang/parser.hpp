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

#include "exmon/lang/ast.hpp"
#include "exmon/lang/errors.hpp"
#include "exmon/lang/query.hpp"
#include "exmon/lang/state_space.hpp"

namespace exmon::lang {

struct ParsedFile {
  Program program;
  /// Trailing `query PRED;` clauses, in source order.
  std::vector<QueryPredicate> queries;
};

/// Throws ParseError with a line:col prefix.
ParsedFile parse(const std::string& source);

/// A query over already declared variables: `r*[b] + [b] + r`, or a bare
/// boolean expression.
QueryPredicate parse_query(const std::string& text, const Decls& decls);

/// "n=0,c=1" naming every declared variable exactly once.
Valuation parse_valuation(const std::string& text, const Decls& decls);

}  // namespace exmon::lang
