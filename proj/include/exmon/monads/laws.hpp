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
#include <string>

#include "exmon/core/law_report.hpp"
#include "exmon/monads/dist.hpp"
#include "exmon/monads/expectation.hpp"
#include "exmon/monads/measure.hpp"
#include "exmon/monads/ultrafilter.hpp"

namespace exmon::monads {

/// The structure maps exercised by check_monad_laws. Defaults are the real
/// implementations; tests swap in mutants to confirm the harness bites.
struct MonadLawHooks {
  std::function<Dist(const Convex<Dist>&)> dist_mu = monads::dist_mu;
  std::function<Expectation(const Dist&)> sigma = monads::sigma;
  std::function<WeightMatrix(const WeightMatrix&, const WeightMatrix&)> compose = matrix_product;
  std::function<Expectation(const PrincipalUltrafilter&)> tau = monads::tau;
};

namespace mutants {

/// sigma with weights squared and renormalized.
MonadLawHooks squared_sigma();
/// Kleisli composition returning the transpose of the true product.
MonadLawHooks transposed_compose();
/// dist_mu that ignores the outer weights and averages uniformly.
MonadLawHooks unweighted_mu();

}  // namespace mutants

/// Exact checks on `cases` seeded random instances with |X| <= 6:
///   D unit laws and associativity through dist_mu;
///   E Kleisli unit laws and associativity;
///   sigma and tau as monad maps (unit squares, plus the multiplication
///   squares in Kleisli form and, for sigma, directly on finitely supported
///   second-order states).
LawReport check_monad_laws(std::uint64_t seed, std::size_t cases, const MonadLawHooks& hooks = {});

/// On `cases` random expectations with 1 <= |X| <= max_atoms:
///   phi(h) is finitely additive and phi_inverse(phi(h)) = h exactly;
///   a planted table (phi(h) with one proper nonempty subset's value moved)
///   is rejected with a disjoint pair (U, V) for which
///   m(U u V) != m(U) + m(V).
/// Planted cases need |X| >= 2 and are drawn only for such X.
LawReport check_measure_bijection(std::uint64_t seed, std::size_t cases, std::size_t max_atoms = 8);

std::string matrix_string(const WeightMatrix& m);

}  // namespace exmon::monads
