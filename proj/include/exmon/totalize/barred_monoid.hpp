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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "exmon/core/finset.hpp"
#include "exmon/core/random.hpp"
#include "exmon/core/rational.hpp"
#include "exmon/effect/instance.hpp"

namespace exmon::totalize {

using effect::Element;

/// Nonnegative rational scalar acting on a cone.
class ConeScalar {
 public:
  ConeScalar() = default;
  explicit ConeScalar(Rational value);
  const Rational& value() const { return value_; }

 private:
  Rational value_;
};

enum class MonoidFamily { NatWithUnit, NonnegRational, NatTuple, Custom };

/// A commutative monoid with a distinguished unit u, given by its
/// operations. Catalog families encode elements as rational coordinates
/// like the effect-algebra catalog does.
struct BarredMonoid {
  MonoidFamily family = MonoidFamily::Custom;
  std::string name;
  FinSet atoms;  // NatTuple only

  Element zero;
  Element unit;
  std::function<Element(const Element&, const Element&)> add;
  /// z with x + z = y when it exists; witnesses x <= y.
  std::function<std::optional<Element>(const Element&, const Element&)> difference;
  /// r.x when the result stays in the carrier.
  std::function<std::optional<Element>(const ConeScalar&, const Element&)> scale;
  std::function<std::string(const Element&)> format;

  /// All x <= u, when that down-set is finite.
  std::function<std::optional<std::vector<Element>>()> below_unit;
  /// Random element x <= bound.
  std::function<Element(Rng&, const Element&)> sample_below;

  bool leq(const Element& x, const Element& y) const { return difference(x, y).has_value(); }
  /// k.u computed by repeated addition.
  Element unit_multiple(std::uint64_t k) const;
  std::string show(const Element& e) const { return format(e); }
};

namespace monoids {

/// (N, +) with unit n.
BarredMonoid nat_with_unit(std::uint64_t n);
/// (Q>=0, +) with unit 1.
BarredMonoid nonneg_rationals();
/// (N^A, +) with the all-ones unit.
BarredMonoid nat_tuple(const FinSet& atoms);

}  // namespace monoids

}  // namespace exmon::totalize
