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
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "exmon/core/rational.hpp"

namespace exmon::lang {

/// A declared variable ranging over the integers lo..hi inclusive.
struct VarDecl {
  std::string name;
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::size_t range_size() const { return static_cast<std::size_t>(hi - lo) + 1; }
  bool contains(std::int64_t v) const { return lo <= v && v <= hi; }
};

using Decls = std::vector<VarDecl>;

struct ArithExpr;
struct BoolExpr;
struct Stmt;
using ArithPtr = std::shared_ptr<const ArithExpr>;
using BoolPtr = std::shared_ptr<const BoolExpr>;
using StmtPtr = std::shared_ptr<const Stmt>;

struct ArithExpr {
  enum class Kind { Literal, Var, Neg, Add, Sub, Mul };
  Kind kind = Kind::Literal;
  std::int64_t value = 0;  // Literal
  std::size_t var = 0;     // Var: index into the declarations
  ArithPtr lhs;            // Neg uses lhs only
  ArithPtr rhs;
};

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

struct BoolExpr {
  enum class Kind { True, False, Cmp, And, Or, Not };
  Kind kind = Kind::True;
  CmpOp op = CmpOp::Eq;
  ArithPtr a;
  ArithPtr b;
  BoolPtr lhs;  // Not uses lhs only
  BoolPtr rhs;
};

/// value -> weight; weights positive and summing to 1, values distinct.
using DistLiteral = std::vector<std::pair<std::int64_t, Rational>>;

struct Stmt {
  enum class Kind { Skip, DetAssign, ProbAssign, Seq, If, Choose, While };
  Kind kind = Kind::Skip;
  std::size_t var = 0;   // DetAssign, ProbAssign
  ArithPtr expr;         // DetAssign
  DistLiteral dist;      // ProbAssign
  BoolPtr guard;         // If, While
  StmtPtr first;         // Seq, If (then), While (body)
  StmtPtr second;        // Seq, If (else)
  std::vector<std::pair<Rational, StmtPtr>> branches;  // Choose, weights sum to 1
};

ArithPtr lit(std::int64_t v);
ArithPtr var(std::size_t index);
ArithPtr arith(ArithExpr::Kind kind, ArithPtr lhs, ArithPtr rhs = nullptr);
BoolPtr bool_const(bool v);
BoolPtr cmp(CmpOp op, ArithPtr a, ArithPtr b);
BoolPtr logic(BoolExpr::Kind kind, BoolPtr lhs, BoolPtr rhs = nullptr);

StmtPtr skip();
StmtPtr det_assign(std::size_t var, ArithPtr expr);
/// Throws DomainError on invalid weights or repeated values.
StmtPtr prob_assign(std::size_t var, DistLiteral dist);
StmtPtr seq(StmtPtr first, StmtPtr second);
StmtPtr if_then_else(BoolPtr guard, StmtPtr then_branch, StmtPtr else_branch);
/// Throws DomainError unless weights are >= 0 and sum to 1.
StmtPtr choose(std::vector<std::pair<Rational, StmtPtr>> branches);
StmtPtr while_loop(BoolPtr guard, StmtPtr body);

/// A parsed source file.
struct Program {
  Decls decls;
  StmtPtr body;
};

bool contains_loop(const Stmt& s);

/// Concrete syntax, fully parenthesized.
std::string to_source(const ArithExpr& e, const Decls& decls);
std::string to_source(const BoolExpr& e, const Decls& decls);
/// S-expression form, e.g. (seq skip (:= n (+ n 1))).
std::string to_tree(const Stmt& s, const Decls& decls);

}  // namespace exmon::lang
