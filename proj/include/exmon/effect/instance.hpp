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
#include "exmon/effect/predicate.hpp"

namespace exmon::effect {

/// Carrier element of a catalog instance, encoded as rational coordinates.
///
///   TwoElement, Chain(n)        -> one integer coordinate
///   UnitInterval                -> one coordinate in [0,1]
///   Powerset(X)                 -> |X| coordinates in {0,1}
///   Predicate(X)                -> |X| coordinates in [0,1]
///   Product(E1..Ek)             -> concatenated coordinates
struct Element {
  std::vector<Rational> coords;

  friend bool operator==(const Element&, const Element&) = default;
};

enum class Family { TwoElement, UnitInterval, Chain, Powerset, Predicate, Product, Custom };

const char* family_name(Family f);

/// An effect algebra given by its operations.
///
/// The operations are plain callables so law checks can be pointed at
/// deliberately broken variants (copy a catalog instance, replace `osum`).
struct EffectAlgebraInstance {
  Family family = Family::Custom;
  std::string name;
  /// Chain height n for Chain(n); ignored otherwise.
  std::uint64_t chain_height = 0;
  /// Atom set for Powerset/Predicate; empty otherwise.
  FinSet atoms;
  std::vector<EffectAlgebraInstance> components;

  std::function<Element()> zero;
  std::function<Element()> one;
  std::function<Element(const Element&)> ortho;
  std::function<std::optional<Element>(const Element&, const Element&)> osum;
  std::function<std::string(const Element&)> format;

  /// Exact carrier size when finite, with random access into the carrier.
  std::optional<std::uint64_t> carrier_size;
  std::function<Element(std::uint64_t)> element_at;

  std::function<Element(Rng&)> sample;
  /// Random element y with y (+) bound^perp defined, i.e. y below `bound`.
  std::function<Element(Rng&, const Element&)> sample_below;

  bool enumerable() const { return carrier_size.has_value(); }
  std::string show(const Element& e) const { return format(e); }
};

/// An effect module: an effect algebra plus a [0,1] action.
struct EffectModuleInstance {
  EffectAlgebraInstance algebra;
  std::function<Element(const UnitScalar&, const Element&)> act;
};

namespace catalog {

EffectAlgebraInstance two_element();
/// Rational points of [0,1] with truncated addition as partial sum.
EffectAlgebraInstance unit_interval();
/// {0,1,..,n} with x (+) y = x+y when <= n.
EffectAlgebraInstance chain(std::uint64_t n);
/// Subsets of X; disjoint union as partial sum.
EffectAlgebraInstance powerset(const FinSet& atoms);
/// Fuzzy predicates [0,1]^X with pointwise partial sum.
EffectAlgebraInstance predicates(const FinSet& atoms);
EffectAlgebraInstance product(std::vector<EffectAlgebraInstance> components);

EffectModuleInstance unit_interval_module();
EffectModuleInstance predicate_module(const FinSet& atoms);

}  // namespace catalog

Element to_element(const Predicate& p);
Predicate to_predicate(const FinSet& atoms, const Element& e);
Element scalar_element(const Rational& r);

}  // namespace exmon::effect
