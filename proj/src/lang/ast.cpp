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

#include "exmon/lang/ast.hpp"

#include <set>

#include "exmon/core/error.hpp"

namespace exmon::lang {

ArithPtr lit(std::int64_t v) {
  auto e = std::make_shared<ArithExpr>();
  e->kind = ArithExpr::Kind::Literal;
  e->value = v;
  return e;
}

ArithPtr var(std::size_t index) {
  auto e = std::make_shared<ArithExpr>();
  e->kind = ArithExpr::Kind::Var;
  e->var = index;
  return e;
}

ArithPtr arith(ArithExpr::Kind kind, ArithPtr lhs, ArithPtr rhs) {
  auto e = std::make_shared<ArithExpr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

BoolPtr bool_const(bool v) {
  auto e = std::make_shared<BoolExpr>();
  e->kind = v ? BoolExpr::Kind::True : BoolExpr::Kind::False;
  return e;
}

BoolPtr cmp(CmpOp op, ArithPtr a, ArithPtr b) {
  auto e = std::make_shared<BoolExpr>();
  e->kind = BoolExpr::Kind::Cmp;
  e->op = op;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

BoolPtr logic(BoolExpr::Kind kind, BoolPtr lhs, BoolPtr rhs) {
  auto e = std::make_shared<BoolExpr>();
  e->kind = kind;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

StmtPtr skip() { return std::make_shared<Stmt>(); }

StmtPtr det_assign(std::size_t var, ArithPtr expr) {
  auto s = std::make_shared<Stmt>();
  s->kind = Stmt::Kind::DetAssign;
  s->var = var;
  s->expr = std::move(expr);
  return s;
}

StmtPtr prob_assign(std::size_t var, DistLiteral dist) {
  if (dist.empty()) throw DomainError("distribution literal is empty");
  std::set<std::int64_t> seen;
  Rational total;
  for (const auto& [value, w] : dist) {
    if (w.sign() <= 0) throw DomainError("distribution weight " + w.to_string() + " is not positive");
    if (!seen.insert(value).second) throw DomainError("distribution lists value " + std::to_string(value) + " twice");
    total += w;
  }
  if (total != Rational(1)) throw DomainError("distribution weights sum to " + total.to_string() + ", not 1");
  auto s = std::make_shared<Stmt>();
  s->kind = Stmt::Kind::ProbAssign;
  s->var = var;
  s->dist = std::move(dist);
  return s;
}

StmtPtr seq(StmtPtr first, StmtPtr second) {
  auto s = std::make_shared<Stmt>();
  s->kind = Stmt::Kind::Seq;
  s->first = std::move(first);
  s->second = std::move(second);
  return s;
}

StmtPtr if_then_else(BoolPtr guard, StmtPtr then_branch, StmtPtr else_branch) {
  auto s = std::make_shared<Stmt>();
  s->kind = Stmt::Kind::If;
  s->guard = std::move(guard);
  s->first = std::move(then_branch);
  s->second = std::move(else_branch);
  return s;
}

StmtPtr choose(std::vector<std::pair<Rational, StmtPtr>> branches) {
  if (branches.empty()) throw DomainError("choose has no branches");
  Rational total;
  for (const auto& [w, _] : branches) {
    if (w.sign() < 0) throw DomainError("choose weight " + w.to_string() + " is negative");
    total += w;
  }
  if (total != Rational(1)) throw DomainError("choose weights sum to " + total.to_string() + ", not 1");
  auto s = std::make_shared<Stmt>();
  s->kind = Stmt::Kind::Choose;
  s->branches = std::move(branches);
  return s;
}

StmtPtr while_loop(BoolPtr guard, StmtPtr body) {
  auto s = std::make_shared<Stmt>();
  s->kind = Stmt::Kind::While;
  s->guard = std::move(guard);
  s->first = std::move(body);
  return s;
}

bool contains_loop(const Stmt& s) {
  switch (s.kind) {
    case Stmt::Kind::While:
      return true;
    case Stmt::Kind::Seq:
    case Stmt::Kind::If:
      return contains_loop(*s.first) || contains_loop(*s.second);
    case Stmt::Kind::Choose:
      for (const auto& [_, b] : s.branches) {
        if (contains_loop(*b)) return true;
      }
      return false;
    default:
      return false;
  }
}

namespace {

const char* cmp_symbol(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "=";
    case CmpOp::Ne: return "!=";
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
  }
  return "?";
}

const char* arith_symbol(ArithExpr::Kind k) {
  switch (k) {
    case ArithExpr::Kind::Add: return "+";
    case ArithExpr::Kind::Sub: return "-";
    case ArithExpr::Kind::Mul: return "*";
    default: return "?";
  }
}

std::string dist_source(const DistLiteral& d) {
  std::string out = "{";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(d[i].first) + ": " + d[i].second.to_string();
  }
  return out + "}";
}

std::string tree_arith(const ArithExpr& e, const Decls& decls) {
  switch (e.kind) {
    case ArithExpr::Kind::Literal: return std::to_string(e.value);
    case ArithExpr::Kind::Var: return decls.at(e.var).name;
    case ArithExpr::Kind::Neg: return "(- " + tree_arith(*e.lhs, decls) + ")";
    default: return std::string("(") + arith_symbol(e.kind) + " " + tree_arith(*e.lhs, decls) + " " + tree_arith(*e.rhs, decls) + ")";
  }
}

std::string tree_bool(const BoolExpr& e, const Decls& decls) {
  switch (e.kind) {
    case BoolExpr::Kind::True: return "true";
    case BoolExpr::Kind::False: return "false";
    case BoolExpr::Kind::Cmp: return std::string("(") + cmp_symbol(e.op) + " " + tree_arith(*e.a, decls) + " " + tree_arith(*e.b, decls) + ")";
    case BoolExpr::Kind::Not: return "(not " + tree_bool(*e.lhs, decls) + ")";
    case BoolExpr::Kind::And: return "(and " + tree_bool(*e.lhs, decls) + " " + tree_bool(*e.rhs, decls) + ")";
    case BoolExpr::Kind::Or: return "(or " + tree_bool(*e.lhs, decls) + " " + tree_bool(*e.rhs, decls) + ")";
  }
  return "?";
}

}  // namespace

std::string to_source(const ArithExpr& e, const Decls& decls) {
  switch (e.kind) {
    case ArithExpr::Kind::Literal: return std::to_string(e.value);
    case ArithExpr::Kind::Var: return decls.at(e.var).name;
    case ArithExpr::Kind::Neg: return "-(" + to_source(*e.lhs, decls) + ")";
    default: return "(" + to_source(*e.lhs, decls) + " " + arith_symbol(e.kind) + " " + to_source(*e.rhs, decls) + ")";
  }
}

std::string to_source(const BoolExpr& e, const Decls& decls) {
  switch (e.kind) {
    case BoolExpr::Kind::True: return "true";
    case BoolExpr::Kind::False: return "false";
    case BoolExpr::Kind::Cmp: return to_source(*e.a, decls) + " " + cmp_symbol(e.op) + " " + to_source(*e.b, decls);
    case BoolExpr::Kind::Not: return "not (" + to_source(*e.lhs, decls) + ")";
    case BoolExpr::Kind::And: return "(" + to_source(*e.lhs, decls) + ") and (" + to_source(*e.rhs, decls) + ")";
    case BoolExpr::Kind::Or: return "(" + to_source(*e.lhs, decls) + ") or (" + to_source(*e.rhs, decls) + ")";
  }
  return "?";
}

std::string to_tree(const Stmt& s, const Decls& decls) {
  switch (s.kind) {
    case Stmt::Kind::Skip:
      return "skip";
    case Stmt::Kind::DetAssign:
      return "(:= " + decls.at(s.var).name + " " + tree_arith(*s.expr, decls) + ")";
    case Stmt::Kind::ProbAssign:
      return "(~ " + decls.at(s.var).name + " " + dist_source(s.dist) + ")";
    case Stmt::Kind::Seq:
      return "(seq " + to_tree(*s.first, decls) + " " + to_tree(*s.second, decls) + ")";
    case Stmt::Kind::If:
      return "(if " + tree_bool(*s.guard, decls) + " " + to_tree(*s.first, decls) + " " + to_tree(*s.second, decls) + ")";
    case Stmt::Kind::Choose: {
      std::string out = "(choose";
      for (const auto& [w, b] : s.branches) out += " (" + w.to_string() + " " + to_tree(*b, decls) + ")";
      return out + ")";
    }
    case Stmt::Kind::While:
      return "(while " + tree_bool(*s.guard, decls) + " " + to_tree(*s.first, decls) + ")";
  }
  return "?";
}

}  // namespace exmon::lang
