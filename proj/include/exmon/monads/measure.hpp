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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "exmon/core/finset.hpp"
#include "exmon/core/rational.hpp"
#include "exmon/monads/expectation.hpp"

namespace exmon::monads {

inline constexpr std::size_t kMaxMeasureAtoms = 12;

/// A map P(X) -> [0,1] stored by subset bitmask (bit i = atom i).
/// Finite additivity is not assumed; see is_finitely_additive.
class MeasureTable {
 public:
  MeasureTable(FinSet domain, std::vector<UnitScalar> table);

  const FinSet& domain() const { return domain_; }
  std::uint64_t full_mask() const { return (1ULL << domain_.size()) - 1; }
  const UnitScalar& operator[](std::uint64_t mask) const { return table_[mask]; }
  const std::vector<UnitScalar>& table() const { return table_; }

  friend bool operator==(const MeasureTable& a, const MeasureTable& b);

 private:
  FinSet domain_;
  std::vector<UnitScalar> table_;
};

/// Why a table is not a finitely additive measure. For `NotAdditive`,
/// (first, second) is a disjoint pair with m(U u V) != m(U) + m(V).
struct AdditivityWitness {
  enum class Kind { EmptyNotZero, FullNotOne, NotAdditive } kind;
  std::uint64_t first = 0;
  std::uint64_t second = 0;
  std::string describe(const FinSet& domain) const;
};

struct AdditivityVerdict {
  bool additive = true;
  std::optional<AdditivityWitness> witness;
};

/// Exhaustive over all disjoint pairs of nonempty subsets, U ascending.
AdditivityVerdict is_finitely_additive(const MeasureTable& m);

/// Phi(h)(U) = h(1_U). Throws DomainError when |X| > 12.
MeasureTable phi(const Expectation& h);

/// Thrown by phi_inverse for non-additive tables; carries the witness.
class NotAdditiveError : public DomainError {
 public:
  NotAdditiveError(AdditivityWitness w, const std::string& what) : DomainError(what), witness_(w) {}
  const AdditivityWitness& witness() const { return witness_; }

 private:
  AdditivityWitness witness_;
};

/// Weights read off the singletons.
Expectation phi_inverse(const MeasureTable& m);

/// "{a,b}" style rendering of a subset.
std::string subset_string(const FinSet& domain, std::uint64_t mask);

/// {"atoms": [...], "table": {"0x<hex mask>": "num/den", ...}}
nlohmann::ordered_json to_json(const MeasureTable& m);
MeasureTable measure_from_json(const nlohmann::ordered_json& j);

}  // namespace exmon::monads
