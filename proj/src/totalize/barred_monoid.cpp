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

#include "exmon/totalize/barred_monoid.hpp"

#include <sstream>

#include "exmon/core/error.hpp"

namespace exmon::totalize {

ConeScalar::ConeScalar(Rational value) : value_(std::move(value)) {
  if (value_ < Rational(0)) throw DomainError("cone scalar " + value_.to_string() + " is negative");
}

Element BarredMonoid::unit_multiple(std::uint64_t k) const {
  Element acc = zero;
  for (std::uint64_t i = 0; i < k; ++i) acc = add(acc, unit);
  return acc;
}

namespace monoids {

namespace {

Element coordwise_add(const Element& x, const Element& y) {
  Element s = x;
  for (std::size_t i = 0; i < s.coords.size(); ++i) s.coords[i] += y.coords[i];
  return s;
}

std::optional<Element> coordwise_difference(const Element& x, const Element& y) {
  Element d = y;
  for (std::size_t i = 0; i < d.coords.size(); ++i) {
    d.coords[i] -= x.coords[i];
    if (d.coords[i] < Rational(0)) return std::nullopt;
  }
  return d;
}

std::optional<Element> integral_scale(const ConeScalar& r, const Element& x) {
  Element y = x;
  for (auto& c : y.coords) {
    c *= r.value();
    if (!c.is_integer()) return std::nullopt;
  }
  return y;
}

Element random_nat_below(Rng& rng, const Element& bound) {
  Element y = bound;
  for (auto& c : y.coords) c = Rational(static_cast<long long>(rng.below(static_cast<std::uint64_t>(c.to_int64()) + 1)));
  return y;
}

}  // namespace

BarredMonoid nat_with_unit(std::uint64_t n) {
  if (n == 0) throw DomainError("unit of (N, n) must be positive");
  BarredMonoid m;
  m.family = MonoidFamily::NatWithUnit;
  m.name = "(N," + std::to_string(n) + ")";
  m.zero = Element{{Rational(0)}};
  m.unit = Element{{Rational(static_cast<long long>(n))}};
  m.add = coordwise_add;
  m.difference = coordwise_difference;
  m.scale = integral_scale;
  m.format = [](const Element& x) { return x.coords[0].numerator_string(); };
  m.below_unit = [n]() -> std::optional<std::vector<Element>> {
    std::vector<Element> out;
    for (std::uint64_t k = 0; k <= n; ++k) out.push_back(Element{{Rational(static_cast<long long>(k))}});
    return out;
  };
  m.sample_below = random_nat_below;
  return m;
}

BarredMonoid nonneg_rationals() {
  BarredMonoid m;
  m.family = MonoidFamily::NonnegRational;
  m.name = "(Q>=0,1)";
  m.zero = Element{{Rational(0)}};
  m.unit = Element{{Rational(1)}};
  m.add = coordwise_add;
  m.difference = coordwise_difference;
  m.scale = [](const ConeScalar& r, const Element& x) -> std::optional<Element> {
    return Element{{r.value() * x.coords[0]}};
  };
  m.format = [](const Element& x) { return x.coords[0].to_string(); };
  m.below_unit = []() -> std::optional<std::vector<Element>> { return std::nullopt; };
  m.sample_below = [](Rng& rng, const Element& bound) { return Element{{rng.unit_rational() * bound.coords[0]}}; };
  return m;
}

BarredMonoid nat_tuple(const FinSet& atoms) {
  if (atoms.size() > 20) throw DomainError("N^A supported for |A| <= 20");
  BarredMonoid m;
  m.family = MonoidFamily::NatTuple;
  m.name = "(N^" + std::to_string(atoms.size()) + ",1..1)";
  m.atoms = atoms;
  const std::size_t n = atoms.size();
  m.zero = Element{std::vector<Rational>(n, Rational(0))};
  m.unit = Element{std::vector<Rational>(n, Rational(1))};
  m.add = coordwise_add;
  m.difference = coordwise_difference;
  m.scale = integral_scale;
  m.format = [](const Element& x) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < x.coords.size(); ++i) os << (i ? "," : "") << x.coords[i].numerator_string();
    os << ")";
    return os.str();
  };
  m.below_unit = [n]() -> std::optional<std::vector<Element>> {
    std::vector<Element> out;
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
      Element x;
      for (std::size_t i = 0; i < n; ++i) x.coords.emplace_back(static_cast<long long>((mask >> i) & 1U));
      out.push_back(std::move(x));
    }
    return out;
  };
  m.sample_below = random_nat_below;
  return m;
}

}  // namespace monoids

}  // namespace exmon::totalize
