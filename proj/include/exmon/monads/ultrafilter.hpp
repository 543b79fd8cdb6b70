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

#include "exmon/core/finset.hpp"
#include "exmon/effect/predicate.hpp"
#include "exmon/monads/expectation.hpp"

namespace exmon::monads {

/// The ultrafilter {U : x in U} of a point. Finite sets carry no others, so
/// this is the only constructor.
class PrincipalUltrafilter {
 public:
  PrincipalUltrafilter(FinSet domain, std::size_t point);
  PrincipalUltrafilter(FinSet domain, const std::string& point);

  const FinSet& domain() const { return domain_; }
  std::size_t point() const { return point_; }
  /// U in F, for U given as a membership vector over the domain.
  bool contains(const std::vector<bool>& subset) const;

  friend bool operator==(const PrincipalUltrafilter&, const PrincipalUltrafilter&) = default;

 private:
  FinSet domain_;
  std::size_t point_;
};

/// inf { s in [0,1] : {x : p(x) <= s} in F }, evaluated literally: the set
/// {x : p(x) <= s} only changes at values of p, so the infimum is the least
/// such value whose sublevel set belongs to F.
UnitScalar ultrafilter_integral(const PrincipalUltrafilter& f, const effect::Predicate& p);

/// The monad map UF => E at a finite X.
Expectation tau(const PrincipalUltrafilter& f);

}  // namespace exmon::monads
