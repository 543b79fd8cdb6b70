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

#include "exmon/core/law_report.hpp"
#include "exmon/effect/instance.hpp"

namespace exmon::effect {

/// Tuple spaces up to this size are enumerated instead of sampled.
inline constexpr std::uint64_t kExhaustiveTupleLimit = 1ULL << 21;

/// Checks zero-neutrality, commutativity, associativity (with partiality),
/// the orthosupplement law and its uniqueness, and the zero-one law.
///
/// Carriers small enough are checked exhaustively per axiom; otherwise
/// `cases` seeded samples are drawn for each axiom.
LawReport check_effect_algebra(const EffectAlgebraInstance& inst, std::uint64_t seed, std::size_t cases);

/// check_effect_algebra on the underlying algebra plus the four scalar
/// axioms of an effect module, sampled with `cases` draws each.
LawReport check_effect_module(const EffectModuleInstance& inst, std::uint64_t seed, std::size_t cases);

using ElementMap = std::function<Element(const Element&)>;

/// f(1) = 1 and f(x (+) y) = f(x) (+) f(y) whenever x (+) y is defined.
LawReport check_hom(const ElementMap& f, const EffectAlgebraInstance& src, const EffectAlgebraInstance& dst,
                    std::uint64_t seed, std::size_t cases);

/// Effect-algebra hom conditions plus f(r.x) = r.f(x).
LawReport check_hom(const ElementMap& f, const EffectModuleInstance& src, const EffectModuleInstance& dst,
                    std::uint64_t seed, std::size_t cases);

}  // namespace exmon::effect
