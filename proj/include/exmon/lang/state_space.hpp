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
#include <string>
#include <vector>

#include "exmon/core/finset.hpp"
#include "exmon/lang/ast.hpp"

namespace exmon::lang {

inline constexpr std::size_t kMaxStates = std::size_t{1} << 20;

/// Values of the declared variables, in declaration order.
using Valuation = std::vector<std::int64_t>;

/// All total assignments of the declared variables, numbered in mixed radix
/// with the first declared variable most significant.
class StateSpace {
 public:
  /// Throws DomainError when the product of range sizes exceeds kMaxStates.
  explicit StateSpace(Decls decls);

  const Decls& decls() const { return decls_; }
  std::size_t size() const { return size_; }

  Valuation values(std::size_t index) const;
  /// Throws DomainError on a wrong arity or an out-of-range value.
  std::size_t index(const Valuation& values) const;
  /// The state equal to `index` except that `var` holds `value`; the value
  /// must be in range.
  std::size_t with(std::size_t index, std::size_t var, std::int64_t value) const;

  /// "s=2,c=1"; "()" when nothing is declared.
  std::string label(std::size_t index) const;
  FinSet atoms() const;

 private:
  Decls decls_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 1;
};

/// Throws RuntimeError on int64 overflow.
std::int64_t eval(const ArithExpr& e, const Valuation& values);
bool eval(const BoolExpr& e, const Valuation& values);

}  // namespace exmon::lang
