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

#include "exmon/monads/ultrafilter.hpp"

#include <algorithm>
#include <set>

#include "exmon/core/error.hpp"

namespace exmon::monads {

PrincipalUltrafilter::PrincipalUltrafilter(FinSet domain, std::size_t point)
    : domain_(std::move(domain)), point_(point) {
  if (point_ >= domain_.size()) throw DomainError("ultrafilter point outside its domain");
}

PrincipalUltrafilter::PrincipalUltrafilter(FinSet domain, const std::string& point)
    : PrincipalUltrafilter(domain, domain.index_of(point)) {}

bool PrincipalUltrafilter::contains(const std::vector<bool>& subset) const {
  if (subset.size() != domain_.size()) throw DomainError("ultrafilter membership: subset size mismatch");
  return subset[point_];
}

UnitScalar ultrafilter_integral(const PrincipalUltrafilter& f, const effect::Predicate& p) {
  require_same_domain(f.domain(), p.domain(), "ultrafilter_integral");
  std::set<Rational> candidates;
  for (const auto& v : p.values()) candidates.insert(v.value());
  for (const auto& s : candidates) {
    std::vector<bool> sublevel(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) sublevel[i] = p[i].value() <= s;
    if (f.contains(sublevel)) return UnitScalar(s);
  }
  // The largest candidate's sublevel set is all of X, which F contains.
  throw DomainError("ultrafilter_integral: no sublevel set in the filter");
}

Expectation tau(const PrincipalUltrafilter& f) { return exp_unit(f.point(), f.domain()); }

}  // namespace exmon::monads
