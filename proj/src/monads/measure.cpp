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

#include "exmon/monads/measure.hpp"

#include <cstdio>

#include "exmon/core/error.hpp"

namespace exmon::monads {

MeasureTable::MeasureTable(FinSet domain, std::vector<UnitScalar> table)
    : domain_(std::move(domain)), table_(std::move(table)) {
  if (domain_.size() > kMaxMeasureAtoms) {
    throw DomainError("measure tables support at most " + std::to_string(kMaxMeasureAtoms) + " atoms, got " +
                      std::to_string(domain_.size()));
  }
  if (table_.size() != (1ULL << domain_.size())) throw DomainError("measure table needs one entry per subset");
}

bool operator==(const MeasureTable& a, const MeasureTable& b) { return a.domain_ == b.domain_ && a.table_ == b.table_; }

std::string subset_string(const FinSet& domain, std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    if (((mask >> i) & 1U) == 0) continue;
    out += (first ? "" : ",") + domain.atom(i);
    first = false;
  }
  return out + "}";
}

std::string AdditivityWitness::describe(const FinSet& domain) const {
  switch (kind) {
    case Kind::EmptyNotZero: return "m({}) != 0";
    case Kind::FullNotOne: return "m(X) != 1";
    case Kind::NotAdditive:
      return "m(" + subset_string(domain, first | second) + ") != m(" + subset_string(domain, first) + ") + m(" +
             subset_string(domain, second) + ")";
  }
  return "?";
}

AdditivityVerdict is_finitely_additive(const MeasureTable& m) {
  using Kind = AdditivityWitness::Kind;
  if (!m[0].value().is_zero()) return {false, AdditivityWitness{Kind::EmptyNotZero}};
  const std::uint64_t full = m.full_mask();
  if (m[full].value() != Rational(1)) return {false, AdditivityWitness{Kind::FullNotOne, full, 0}};
  for (std::uint64_t u = 1; u <= full; ++u) {
    const std::uint64_t rest = full & ~u;
    // Nonempty submasks v of the complement of u, in ascending order.
    for (std::uint64_t v = rest & (~rest + 1); v != 0; v = (v - rest) & rest) {
      if (m[u | v].value() != m[u].value() + m[v].value()) {
        return {false, AdditivityWitness{Kind::NotAdditive, u, v}};
      }
    }
  }
  return {true, std::nullopt};
}

MeasureTable phi(const Expectation& h) {
  const std::size_t n = h.domain().size();
  if (n > kMaxMeasureAtoms) throw DomainError("phi: domain of " + std::to_string(n) + " atoms exceeds 12");
  std::vector<UnitScalar> table(1ULL << n);
  // m(U) = m(U without its lowest atom) + w(lowest atom).
  std::vector<Rational> acc(1ULL << n);
  for (std::uint64_t mask = 1; mask < acc.size(); ++mask) {
    const std::uint64_t low = mask & (~mask + 1);
    acc[mask] = acc[mask ^ low] + h.weight(static_cast<std::size_t>(__builtin_ctzll(low)));
    table[mask] = UnitScalar(acc[mask]);
  }
  return MeasureTable(h.domain(), std::move(table));
}

Expectation phi_inverse(const MeasureTable& m) {
  auto verdict = is_finitely_additive(m);
  if (!verdict.additive) {
    throw NotAdditiveError(*verdict.witness, "not a finitely additive measure: " + verdict.witness->describe(m.domain()));
  }
  std::vector<Rational> w(m.domain().size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = m[1ULL << i].value();
  return Expectation(m.domain(), std::move(w));
}

nlohmann::ordered_json to_json(const MeasureTable& m) {
  nlohmann::ordered_json table = nlohmann::ordered_json::object();
  char key[24];
  for (std::uint64_t mask = 0; mask <= m.full_mask(); ++mask) {
    std::snprintf(key, sizeof key, "0x%llx", static_cast<unsigned long long>(mask));
    table[key] = m[mask].to_string();
  }
  return {{"atoms", m.domain().atoms()}, {"table", table}};
}

MeasureTable measure_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || !j.contains("atoms") || !j.contains("table")) {
    throw FormatError("measure JSON needs \"atoms\" and \"table\"");
  }
  FinSet domain(j.at("atoms").get<std::vector<std::string>>());
  if (domain.size() > kMaxMeasureAtoms) throw DomainError("measure tables support at most 12 atoms");
  const std::uint64_t size = 1ULL << domain.size();
  std::vector<std::optional<UnitScalar>> entries(size);
  for (const auto& [key, value] : j.at("table").items()) {
    std::uint64_t mask = 0;
    try {
      std::size_t used = 0;
      mask = std::stoull(key, &used, 16);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw FormatError("measure table key '" + key + "' is not a hex bitmask");
    }
    if (mask >= size) throw FormatError("measure table key '" + key + "' names atoms outside the domain");
    if (!value.is_string()) throw FormatError("measure value for '" + key + "' must be a \"num/den\" string");
    entries[mask] = UnitScalar(Rational::parse(value.get<std::string>()));
  }
  std::vector<UnitScalar> table;
  table.reserve(size);
  for (std::uint64_t mask = 0; mask < size; ++mask) {
    if (!entries[mask]) throw FormatError("measure table is missing subset " + subset_string(domain, mask));
    table.push_back(*entries[mask]);
  }
  return MeasureTable(std::move(domain), std::move(table));
}

}  // namespace exmon::monads
