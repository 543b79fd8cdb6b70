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
#include <optional>
#include <vector>

#include <json.hpp>

#include "exmon/core/finset.hpp"
#include "exmon/core/rational.hpp"

namespace exmon::effect {

/// A fuzzy predicate X -> [0,1] on a finite atom set.
class Predicate {
 public:
  Predicate(FinSet domain, std::vector<UnitScalar> values);
  /// Convenience overload; throws DomainError on out-of-range values.
  Predicate(FinSet domain, const std::vector<Rational>& values);

  static Predicate constant(const FinSet& domain, const UnitScalar& c);
  /// Characteristic predicate of {atoms i : members[i]}.
  static Predicate indicator(const FinSet& domain, const std::vector<bool>& members);
  static Predicate indicator_of_mask(const FinSet& domain, std::uint64_t mask);

  const FinSet& domain() const { return domain_; }
  std::size_t size() const { return values_.size(); }
  const UnitScalar& operator[](std::size_t i) const { return values_[i]; }
  const UnitScalar& at(const std::string& atom) const { return values_[domain_.index_of(atom)]; }
  const std::vector<UnitScalar>& values() const { return values_; }

  bool is_constant(const UnitScalar& c) const;

  friend bool operator==(const Predicate& a, const Predicate& b);

 private:
  FinSet domain_;
  std::vector<UnitScalar> values_;
};

/// Partial sum: defined iff p(x)+q(x) <= 1 everywhere. Domain mismatch throws.
std::optional<Predicate> osum(const Predicate& p, const Predicate& q);
Predicate ortho(const Predicate& p);
Predicate smul(const UnitScalar& r, const Predicate& p);
/// max_x |p(x) - q(x)|.
UnitScalar sup_metric(const Predicate& p, const Predicate& q);

struct NormalFormBlock {
  UnitScalar coefficient;
  std::vector<std::size_t> atoms;  // ascending atom indices, nonempty
};

/// p = (+)_i r_i . 1_{X_i} with the r_i distinct and the X_i partitioning X.
/// Blocks are ordered by first occurrence in the domain.
struct SimpleNormalForm {
  FinSet domain;
  std::vector<NormalFormBlock> blocks;

  /// Reassembles the predicate through smul and osum of indicators.
  Predicate reassemble() const;
};

SimpleNormalForm normal_form(const Predicate& p);

/// floor(p(x) * 10^digits) / 10^digits pointwise; digits >= 1.
Predicate decimal_truncate(const Predicate& p, unsigned digits);

/// {"atom": "num/den", ...}
nlohmann::ordered_json to_json(const Predicate& p);
/// Atom order follows key order in the object.
Predicate predicate_from_json(const nlohmann::ordered_json& j);

}  // namespace exmon::effect
