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

#include "exmon/totalize/totalize.hpp"

#include <map>

#include "exmon/core/error.hpp"

namespace exmon::totalize {

using effect::EffectAlgebraInstance;
using effect::Family;

Totalization totalize(const EffectAlgebraInstance& e) {
  // Every catalog family already encodes its elements in the coordinates
  // of its totalization, so the embedding is the identity on coordinates.
  effect::ElementMap identity = [](const Element& x) { return x; };
  switch (e.family) {
    case Family::TwoElement: return {monoids::nat_with_unit(1), identity, identity};
    case Family::Chain: return {monoids::nat_with_unit(e.chain_height), identity, identity};
    case Family::UnitInterval: return {monoids::nonneg_rationals(), identity, identity};
    case Family::Powerset: return {monoids::nat_tuple(e.atoms), identity, identity};
    default: break;
  }
  throw UnsupportedError(std::string("no known totalization for family ") + effect::family_name(e.family) + " (" +
                         e.name + ")");
}

EffectAlgebraInstance partialize(const BarredMonoid& m) {
  EffectAlgebraInstance e;
  e.family = Family::Custom;
  e.name = "Pa" + m.name;
  e.zero = [m] { return m.zero; };
  e.one = [m] { return m.unit; };
  e.ortho = [m](const Element& x) {
    auto z = m.difference(x, m.unit);
    if (!z) throw DomainError("Pa: element " + m.show(x) + " is not below the unit");
    return *z;
  };
  e.osum = [m](const Element& x, const Element& y) -> std::optional<Element> {
    Element s = m.add(x, y);
    if (!m.leq(s, m.unit)) return std::nullopt;
    return s;
  };
  e.format = m.format;
  if (auto carrier = m.below_unit()) {
    auto elements = std::make_shared<const std::vector<Element>>(std::move(*carrier));
    e.carrier_size = elements->size();
    e.element_at = [elements](std::uint64_t i) { return (*elements)[i]; };
  }
  e.sample = [m](Rng& rng) { return m.sample_below(rng, m.unit); };
  e.sample_below = [m](Rng& rng, const Element& bound) { return m.sample_below(rng, bound); };
  return e;
}

namespace {

std::string show_opt(const EffectAlgebraInstance& e, const std::optional<Element>& x) {
  return x ? e.show(*x) : "undefined";
}

}  // namespace

LawReport roundtrip_check(const EffectAlgebraInstance& e, std::uint64_t seed, std::size_t samples) {
  const Totalization t = totalize(e);
  const EffectAlgebraInstance pa = partialize(t.monoid);
  LawReport report{"Pa(To(" + e.name + ")) ~ " + e.name, {}};

  std::vector<Element> elems;
  std::vector<Element> pa_elems;
  Rng rng(seed);
  if (e.enumerable()) {
    for (std::uint64_t i = 0; i < *e.carrier_size; ++i) elems.push_back(e.element_at(i));
    for (std::uint64_t i = 0; i < *pa.carrier_size; ++i) pa_elems.push_back(pa.element_at(i));
  } else {
    for (std::size_t i = 0; i < samples; ++i) elems.push_back(e.sample(rng));
    for (std::size_t i = 0; i < samples; ++i) pa_elems.push_back(pa.sample(rng));
  }

  auto& one = report.axiom("embed(1) = u");
  one.record_case();
  if (!(t.embed(e.one()) == t.monoid.unit)) one.record_failure({{e.show(e.one())}, pa.show(t.monoid.unit), pa.show(t.embed(e.one()))});

  auto& into = report.axiom("embed lands below u");
  auto& inverse = report.axiom("unembed(embed(x)) = x");
  auto& ortho = report.axiom("embed(x^perp) = u - embed(x)");
  std::map<std::vector<std::string>, std::string> images;
  auto& injective = report.axiom("embed injective");
  for (const auto& x : elems) {
    const Element ex = t.embed(x);
    into.record_case();
    if (!t.monoid.leq(ex, t.monoid.unit)) into.record_failure({{e.show(x)}, "<= " + pa.show(t.monoid.unit), pa.show(ex)});
    inverse.record_case();
    if (!(t.unembed(ex) == x)) inverse.record_failure({{e.show(x)}, e.show(x), e.show(t.unembed(ex))});
    ortho.record_case();
    if (t.monoid.leq(ex, t.monoid.unit)) {
      const Element lhs = t.embed(e.ortho(x));
      const Element rhs = pa.ortho(ex);
      if (!(lhs == rhs)) ortho.record_failure({{e.show(x)}, pa.show(rhs), pa.show(lhs)});
    }
    injective.record_case();
    std::vector<std::string> key;
    for (const auto& c : ex.coords) key.push_back(c.to_string());
    auto [it, fresh] = images.emplace(key, e.show(x));
    if (!fresh && it->second != e.show(x)) injective.record_failure({{it->second, e.show(x)}, "distinct images", pa.show(ex)});
  }

  auto& onto = report.axiom("every element of Pa is an image");
  for (const auto& y : pa_elems) {
    onto.record_case();
    const Element back = t.unembed(y);
    if (!(t.embed(back) == y)) onto.record_failure({{pa.show(y)}, pa.show(y), pa.show(t.embed(back))});
  }
  if (e.enumerable() && pa.enumerable() && *e.carrier_size != *pa.carrier_size) {
    onto.record_failure({{}, std::to_string(*e.carrier_size) + " elements", std::to_string(*pa.carrier_size) + " elements"});
  }

  auto& sums = report.axiom("x perp y iff embed(x) + embed(y) <= u, and sums agree");
  auto check_pair = [&](const Element& x, const Element& y) {
    sums.record_case();
    auto lhs = e.osum(x, y);
    auto rhs = pa.osum(t.embed(x), t.embed(y));
    const bool agree = lhs.has_value() == rhs.has_value() && (!lhs || t.embed(*lhs) == *rhs);
    if (!agree) sums.record_failure({{e.show(x), e.show(y)}, lhs ? pa.show(t.embed(*lhs)) : "undefined", show_opt(pa, rhs)});
  };
  if (e.enumerable()) {
    for (const auto& x : elems) {
      for (const auto& y : elems) check_pair(x, y);
    }
  } else {
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const Element& x = elems[i];
      check_pair(x, rng.coin() ? e.sample_below(rng, e.ortho(x)) : elems[(i + 1) % elems.size()]);
    }
  }
  return report;
}

LawReport cancellation_check(const BarredMonoid& m, std::uint64_t seed, std::size_t samples, std::uint64_t bound) {
  LawReport report{"cancellation " + m.name, {}};
  const Element top = m.unit_multiple(bound);
  Rng rng(seed);
  auto& plain = report.axiom("x + y = x + z implies y = z");
  auto& cone = report.axiom("r.x + y = r.x + z implies y = z");
  auto check = [&](AxiomResult& ax, const Element& x, const Element& y, const Element& z) {
    ax.record_case();
    if (m.add(x, y) == m.add(x, z) && !(y == z)) {
      ax.record_failure({{m.show(x), m.show(y), m.show(z)}, "y = z", m.show(y) + " != " + m.show(z)});
    }
  };
  for (std::size_t c = 0; c < samples; ++c) {
    Rng r = rng.fork(c);
    const Element x = m.sample_below(r, top);
    const Element y = m.sample_below(r, top);
    const Element z = r.coin() ? y : m.sample_below(r, top);
    check(plain, x, y, z);
    const ConeScalar s(Rational(static_cast<long long>(r.below(7)), static_cast<long long>(1 + r.below(3))));
    if (auto sx = m.scale(s, x)) check(cone, *sx, y, z);
  }
  return report;
}

LawReport check_barred_monoid(const BarredMonoid& m, std::uint64_t seed, std::size_t samples, std::uint64_t bound) {
  LawReport report{"barred-monoid " + m.name, {}};
  const Element top = m.unit_multiple(bound);
  Rng rng(seed);
  auto& positive = report.axiom("positivity: x + y = 0 implies x = y = 0");
  auto& antisym = report.axiom("antisymmetry: x <= y <= x implies x = y");
  auto& bar = report.axiom("bar: x + y = x + z = u implies y = z");

  auto check_bar = [&](const Element& x, const Element& y) {
    if (!(m.add(x, y) == m.unit)) return;
    bar.record_case();
    auto z = m.difference(x, m.unit);
    if (!z || !(*z == y)) bar.record_failure({{m.show(x), m.show(y)}, z ? m.show(*z) : "no complement", m.show(y)});
  };
  if (auto down = m.below_unit()) {
    for (const auto& x : *down) {
      for (const auto& y : *down) check_bar(x, y);
    }
  }
  for (std::size_t c = 0; c < samples; ++c) {
    Rng r = rng.fork(c);
    const Element x = m.sample_below(r, top);
    const Element y = r.coin() ? m.sample_below(r, top) : m.zero;
    positive.record_case();
    if (m.add(x, y) == m.zero && !(x == m.zero && y == m.zero)) {
      positive.record_failure({{m.show(x), m.show(y)}, "x = y = 0", m.show(m.add(x, y))});
    }
    antisym.record_case();
    // Compare x with itself plus an optional zero-difference perturbation.
    const Element w = r.coin() ? x : m.add(x, m.sample_below(r, m.unit));
    if (m.leq(x, w) && m.leq(w, x) && !(x == w)) antisym.record_failure({{m.show(x), m.show(w)}, "x = y", "x != y"});
    const Element u_part = m.sample_below(r, m.unit);
    if (auto rest = m.difference(u_part, m.unit)) check_bar(u_part, *rest);
  }
  return report;
}

}  // namespace exmon::totalize
