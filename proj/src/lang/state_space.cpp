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

#include "exmon/lang/state_space.hpp"

#include "exmon/core/error.hpp"
#include "exmon/lang/errors.hpp"

namespace exmon::lang {

StateSpace::StateSpace(Decls decls) : decls_(std::move(decls)), strides_(decls_.size()) {
  for (std::size_t i = decls_.size(); i-- > 0;) {
    const auto& d = decls_[i];
    if (d.lo > d.hi) throw DomainError("variable " + d.name + " has an empty range");
    strides_[i] = size_;
    if (d.range_size() > kMaxStates / size_) {
      throw DomainError("state space exceeds " + std::to_string(kMaxStates) + " states");
    }
    size_ *= d.range_size();
  }
}

Valuation StateSpace::values(std::size_t index) const {
  if (index >= size_) throw DomainError("state index out of range");
  Valuation out(decls_.size());
  for (std::size_t i = 0; i < decls_.size(); ++i) {
    out[i] = decls_[i].lo + static_cast<std::int64_t>((index / strides_[i]) % decls_[i].range_size());
  }
  return out;
}

std::size_t StateSpace::index(const Valuation& values) const {
  if (values.size() != decls_.size()) throw DomainError("valuation has the wrong number of variables");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < decls_.size(); ++i) {
    if (!decls_[i].contains(values[i])) {
      throw DomainError("value " + std::to_string(values[i]) + " outside the range of " + decls_[i].name);
    }
    idx += static_cast<std::size_t>(values[i] - decls_[i].lo) * strides_[i];
  }
  return idx;
}

std::size_t StateSpace::with(std::size_t index, std::size_t var, std::int64_t value) const {
  const auto& d = decls_.at(var);
  const auto old = static_cast<std::size_t>((index / strides_[var]) % d.range_size());
  return index - old * strides_[var] + static_cast<std::size_t>(value - d.lo) * strides_[var];
}

std::string StateSpace::label(std::size_t index) const {
  if (decls_.empty()) return "()";
  const Valuation v = values(index);
  std::string out;
  for (std::size_t i = 0; i < decls_.size(); ++i) {
    if (i > 0) out += ",";
    out += decls_[i].name + "=" + std::to_string(v[i]);
  }
  return out;
}

FinSet StateSpace::atoms() const {
  std::vector<std::string> labels;
  labels.reserve(size_);
  for (std::size_t i = 0; i < size_; ++i) labels.push_back(label(i));
  return FinSet(std::move(labels));
}

std::int64_t eval(const ArithExpr& e, const Valuation& values) {
  std::int64_t out = 0;
  switch (e.kind) {
    case ArithExpr::Kind::Literal:
      return e.value;
    case ArithExpr::Kind::Var:
      return values.at(e.var);
    case ArithExpr::Kind::Neg: {
      if (__builtin_sub_overflow(std::int64_t{0}, eval(*e.lhs, values), &out)) throw RuntimeError("integer overflow");
      return out;
    }
    case ArithExpr::Kind::Add:
      if (__builtin_add_overflow(eval(*e.lhs, values), eval(*e.rhs, values), &out)) throw RuntimeError("integer overflow");
      return out;
    case ArithExpr::Kind::Sub:
      if (__builtin_sub_overflow(eval(*e.lhs, values), eval(*e.rhs, values), &out)) throw RuntimeError("integer overflow");
      return out;
    case ArithExpr::Kind::Mul:
      if (__builtin_mul_overflow(eval(*e.lhs, values), eval(*e.rhs, values), &out)) throw RuntimeError("integer overflow");
      return out;
  }
  return out;
}

bool eval(const BoolExpr& e, const Valuation& values) {
  switch (e.kind) {
    case BoolExpr::Kind::True:
      return true;
    case BoolExpr::Kind::False:
      return false;
    case BoolExpr::Kind::Not:
      return !eval(*e.lhs, values);
    case BoolExpr::Kind::And:
      return eval(*e.lhs, values) && eval(*e.rhs, values);
    case BoolExpr::Kind::Or:
      return eval(*e.lhs, values) || eval(*e.rhs, values);
    case BoolExpr::Kind::Cmp: {
      const std::int64_t a = eval(*e.a, values);
      const std::int64_t b = eval(*e.b, values);
      switch (e.op) {
        case CmpOp::Eq: return a == b;
        case CmpOp::Ne: return a != b;
        case CmpOp::Lt: return a < b;
        case CmpOp::Le: return a <= b;
        case CmpOp::Gt: return a > b;
        case CmpOp::Ge: return a >= b;
      }
    }
  }
  return false;
}

}  // namespace exmon::lang
