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

#include "exmon/effect/instance.hpp"

#include <limits>
#include <sstream>

#include "exmon/core/error.hpp"

namespace exmon::effect {

const char* family_name(Family f) {
  switch (f) {
    case Family::TwoElement: return "TwoElement";
    case Family::UnitInterval: return "UnitInterval";
    case Family::Chain: return "Chain";
    case Family::Powerset: return "Powerset";
    case Family::Predicate: return "Predicate";
    case Family::Product: return "Product";
    case Family::Custom: return "Custom";
  }
  return "?";
}

Element to_element(const Predicate& p) {
  Element e;
  e.coords.reserve(p.size());
  for (const auto& v : p.values()) e.coords.push_back(v.value());
  return e;
}

Predicate to_predicate(const FinSet& atoms, const Element& e) { return Predicate(atoms, e.coords); }

Element scalar_element(const Rational& r) { return Element{{r}}; }

namespace catalog {

namespace {

std::string join_coords(const Element& e) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < e.coords.size(); ++i) os << (i ? "," : "") << e.coords[i];
  os << ")";
  return os.str();
}

// Shared machinery for Chain(n); TwoElement is Chain(1) under another name.
EffectAlgebraInstance integer_chain(std::uint64_t n) {
  EffectAlgebraInstance e;
  e.family = Family::Chain;
  e.name = "Chain(" + std::to_string(n) + ")";
  e.chain_height = n;
  const Rational top(static_cast<long long>(n));
  e.zero = [] { return Element{{Rational(0)}}; };
  e.one = [top] { return Element{{top}}; };
  e.ortho = [top](const Element& x) { return Element{{top - x.coords[0]}}; };
  e.osum = [top](const Element& x, const Element& y) -> std::optional<Element> {
    Rational s = x.coords[0] + y.coords[0];
    if (s > top) return std::nullopt;
    return Element{{s}};
  };
  e.format = [](const Element& x) { return x.coords[0].numerator_string(); };
  e.carrier_size = n + 1;
  e.element_at = [](std::uint64_t i) { return Element{{Rational(static_cast<long long>(i))}}; };
  e.sample = [n](Rng& rng) { return Element{{Rational(static_cast<long long>(rng.below(n + 1)))}}; };
  e.sample_below = [](Rng& rng, const Element& bound) {
    auto b = static_cast<std::uint64_t>(bound.coords[0].to_int64());
    return Element{{Rational(static_cast<long long>(rng.below(b + 1)))}};
  };
  return e;
}

}  // namespace

EffectAlgebraInstance two_element() {
  EffectAlgebraInstance e = integer_chain(1);
  e.family = Family::TwoElement;
  e.name = "TwoElement";
  return e;
}

EffectAlgebraInstance chain(std::uint64_t n) {
  if (n == 0) throw DomainError("Chain(n) needs n >= 1");
  return integer_chain(n);
}

EffectAlgebraInstance unit_interval() {
  EffectAlgebraInstance e;
  e.family = Family::UnitInterval;
  e.name = "UnitInterval";
  e.zero = [] { return Element{{Rational(0)}}; };
  e.one = [] { return Element{{Rational(1)}}; };
  e.ortho = [](const Element& x) { return Element{{Rational(1) - x.coords[0]}}; };
  e.osum = [](const Element& x, const Element& y) -> std::optional<Element> {
    Rational s = x.coords[0] + y.coords[0];
    if (s > Rational(1)) return std::nullopt;
    return Element{{s}};
  };
  e.format = [](const Element& x) { return x.coords[0].to_string(); };
  e.sample = [](Rng& rng) { return Element{{rng.unit_rational()}}; };
  e.sample_below = [](Rng& rng, const Element& bound) {
    return Element{{rng.unit_rational() * bound.coords[0]}};
  };
  return e;
}

EffectAlgebraInstance powerset(const FinSet& atoms) {
  if (atoms.size() > 63) throw DomainError("Powerset supports at most 63 atoms");
  EffectAlgebraInstance e;
  e.family = Family::Powerset;
  e.name = "Powerset(" + std::to_string(atoms.size()) + ")";
  e.atoms = atoms;
  const std::size_t n = atoms.size();
  auto from_mask = [n](std::uint64_t mask) {
    Element x;
    x.coords.reserve(n);
    for (std::size_t i = 0; i < n; ++i) x.coords.emplace_back(static_cast<long long>((mask >> i) & 1U));
    return x;
  };
  e.zero = [from_mask] { return from_mask(0); };
  e.one = [from_mask, n] { return from_mask(n == 64 ? ~0ULL : (1ULL << n) - 1); };
  e.ortho = [](const Element& x) {
    Element y = x;
    for (auto& c : y.coords) c = Rational(1) - c;
    return y;
  };
  e.osum = [](const Element& x, const Element& y) -> std::optional<Element> {
    Element s;
    s.coords.reserve(x.coords.size());
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
      Rational v = x.coords[i] + y.coords[i];
      if (v > Rational(1)) return std::nullopt;
      s.coords.push_back(v);
    }
    return s;
  };
  e.format = [atoms](const Element& x) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
      if (x.coords[i].is_zero()) continue;
      out += (first ? "" : ",") + atoms.atom(i);
      first = false;
    }
    return out + "}";
  };
  e.carrier_size = 1ULL << n;
  e.element_at = from_mask;
  e.sample = [from_mask, n](Rng& rng) { return from_mask(rng.next() & ((1ULL << n) - 1)); };
  e.sample_below = [](Rng& rng, const Element& bound) {
    Element y = bound;
    for (auto& c : y.coords) {
      if (!c.is_zero() && rng.coin()) c = Rational(0);
    }
    return y;
  };
  return e;
}

EffectAlgebraInstance predicates(const FinSet& atoms) {
  EffectAlgebraInstance e = powerset(atoms);
  e.family = Family::Predicate;
  e.name = "Predicate(" + std::to_string(atoms.size()) + ")";
  e.carrier_size.reset();
  e.element_at = nullptr;
  e.format = join_coords;
  const std::size_t n = atoms.size();
  e.sample = [n](Rng& rng) {
    Element x;
    x.coords.reserve(n);
    for (std::size_t i = 0; i < n; ++i) x.coords.push_back(rng.unit_rational());
    return x;
  };
  e.sample_below = [](Rng& rng, const Element& bound) {
    Element y = bound;
    for (auto& c : y.coords) c = c * rng.unit_rational();
    return y;
  };
  return e;
}

EffectAlgebraInstance product(std::vector<EffectAlgebraInstance> components) {
  if (components.empty()) throw DomainError("Product needs at least one component");
  EffectAlgebraInstance e;
  e.family = Family::Product;
  e.name = "Product(";
  for (std::size_t i = 0; i < components.size(); ++i) e.name += (i ? "," : "") + components[i].name;
  e.name += ")";

  // Coordinates per component, taken from each component's zero.
  std::vector<std::size_t> widths;
  for (const auto& c : components) widths.push_back(c.zero().coords.size());

  auto split = [widths](const Element& x) {
    std::vector<Element> parts;
    std::size_t off = 0;
    for (auto w : widths) {
      parts.push_back(Element{{x.coords.begin() + static_cast<std::ptrdiff_t>(off),
                               x.coords.begin() + static_cast<std::ptrdiff_t>(off + w)}});
      off += w;
    }
    return parts;
  };
  auto join = [](const std::vector<Element>& parts) {
    Element x;
    for (const auto& p : parts) x.coords.insert(x.coords.end(), p.coords.begin(), p.coords.end());
    return x;
  };

  const auto comps = components;
  e.zero = [comps, join] {
    std::vector<Element> parts;
    for (const auto& c : comps) parts.push_back(c.zero());
    return join(parts);
  };
  e.one = [comps, join] {
    std::vector<Element> parts;
    for (const auto& c : comps) parts.push_back(c.one());
    return join(parts);
  };
  e.ortho = [comps, split, join](const Element& x) {
    auto parts = split(x);
    for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = comps[i].ortho(parts[i]);
    return join(parts);
  };
  e.osum = [comps, split, join](const Element& x, const Element& y) -> std::optional<Element> {
    auto px = split(x);
    auto py = split(y);
    std::vector<Element> out;
    for (std::size_t i = 0; i < px.size(); ++i) {
      auto s = comps[i].osum(px[i], py[i]);
      if (!s) return std::nullopt;
      out.push_back(std::move(*s));
    }
    return join(out);
  };
  e.format = [comps, split](const Element& x) {
    auto parts = split(x);
    std::string out = "<";
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + comps[i].format(parts[i]);
    return out + ">";
  };
  bool finite = true;
  std::uint64_t size = 1;
  for (const auto& c : comps) {
    if (!c.carrier_size || *c.carrier_size == 0 ||
        size > std::numeric_limits<std::uint64_t>::max() / *c.carrier_size) {
      finite = false;
      break;
    }
    size *= *c.carrier_size;
  }
  if (finite) {
    e.carrier_size = size;
    e.element_at = [comps, join](std::uint64_t index) {
      std::vector<Element> parts;
      for (const auto& c : comps) {
        parts.push_back(c.element_at(index % *c.carrier_size));
        index /= *c.carrier_size;
      }
      return join(parts);
    };
  }
  e.sample = [comps, join](Rng& rng) {
    std::vector<Element> parts;
    for (const auto& c : comps) parts.push_back(c.sample(rng));
    return join(parts);
  };
  e.sample_below = [comps, split, join](Rng& rng, const Element& bound) {
    auto parts = split(bound);
    for (std::size_t i = 0; i < parts.size(); ++i) parts[i] = comps[i].sample_below(rng, parts[i]);
    return join(parts);
  };
  e.components = std::move(components);
  return e;
}

EffectModuleInstance unit_interval_module() {
  return EffectModuleInstance{unit_interval(), [](const UnitScalar& r, const Element& x) {
                                return Element{{r.value() * x.coords[0]}};
                              }};
}

EffectModuleInstance predicate_module(const FinSet& atoms) {
  return EffectModuleInstance{predicates(atoms), [](const UnitScalar& r, const Element& x) {
                                Element y = x;
                                for (auto& c : y.coords) c = r.value() * c;
                                return y;
                              }};
}

}  // namespace catalog

}  // namespace exmon::effect
