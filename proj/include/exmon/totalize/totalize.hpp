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

#include "exmon/core/law_report.hpp"
#include "exmon/effect/instance.hpp"
#include "exmon/effect/laws.hpp"
#include "exmon/totalize/barred_monoid.hpp"

namespace exmon::totalize {

/// The totalization of a catalog effect algebra, with the canonical
/// embedding of its carrier and the inverse on Pa of the result.
struct Totalization {
  BarredMonoid monoid;
  effect::ElementMap embed;
  effect::ElementMap unembed;
};

/// Known totalizations:
///   TwoElement -> (N, 1), Chain(n) -> (N, n), UnitInterval -> (Q>=0, 1),
///   Powerset(A) -> (N^A, all ones).
/// Any other family throws UnsupportedError.
Totalization totalize(const effect::EffectAlgebraInstance& e);

/// The effect algebra {x : x <= u} with x (+) y = x + y when x + y <= u.
effect::EffectAlgebraInstance partialize(const BarredMonoid& m);

/// Confirms Pa(To(e)) is isomorphic to e through the embedding.
/// Enumerable carriers are checked on every element and pair; the rational
/// interval on `samples` seeded draws.
LawReport roundtrip_check(const effect::EffectAlgebraInstance& e, std::uint64_t seed = 0, std::size_t samples = 500);

/// x + y = x + z implies y = z, on sampled triples below bound.u; the cone
/// variant scales x by a random ConeScalar first.
LawReport cancellation_check(const BarredMonoid& m, std::uint64_t seed, std::size_t samples, std::uint64_t bound = 3);

/// Positivity, the bar condition and antisymmetry of <=, sampled below
/// bound.u (exhaustively on finite down-sets of u for the bar condition).
LawReport check_barred_monoid(const BarredMonoid& m, std::uint64_t seed, std::size_t samples, std::uint64_t bound = 3);

}  // namespace exmon::totalize
