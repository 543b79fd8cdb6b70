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

#include "exmon/effect/predicate.hpp"

#include <algorithm>

#include "exmon/core/error.hpp"

namespace exmon::effect {

Predicate::Predicate(FinSet domain, std::vector<UnitScalar> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_.size()) {
    throw DomainError("predicate needs one value per atom (" + std::to_string(domain_.size()) +
                      "), got " + std::to_string(values_.size()));
  }
}

Predicate::Predicate(FinSet domain, const std::vector<Rational>& values)
    : Predicate(std::move(domain), std::vector<UnitScalar>(values.begin(), values.end())) {}

Predicate Predicate::constant(const FinSet& domain, const UnitScalar& c) {
  return Predicate(domain, std::vector<UnitScalar>(domain.size(), c));
}

Predicate Predicate::indicator(const FinSet& domain, const std::vector<bool>& members) {
  if (members.size() != domain.size()) throw DomainError("indicator: membership vector size mismatch");
  std::vector<UnitScalar> v;
  v.reserve(members.size());
  for (bool m : members) v.push_back(m ? UnitScalar::one() : UnitScalar::zero());
  return Predicate(domain, std::move(v));
}

Predicate Predicate::indicator_of_mask(const FinSet& domain, std::uint64_t mask) {
  std::vector<bool> members(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) members[i] = ((mask >> i) & 1U) != 0;
  return indicator(domain, members);
}

bool Predicate::is_constant(const UnitScalar& c) const {
  return std::all_of(values_.begin(), values_.end(), [&](const UnitScalar& v) { return v == c; });
}

bool operator==(const Predicate& a, const Predicate& b) {
  return a.domain_ == b.domain_ && a.values_ == b.values_;
}

std::optional<Predicate> osum(const Predicate& p, const Predicate& q) {
  require_same_domain(p.domain(), q.domain(), "osum");
  std::vector<UnitScalar> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rational s = p[i].value() + q[i].value();
    if (s > Rational(1)) return std::nullopt;
    out.emplace_back(s);
  }
  return Predicate(p.domain(), std::move(out));
}

Predicate ortho(const Predicate& p) {
  std::vector<UnitScalar> out;
  out.reserve(p.size());
  for (const auto& v : p.values()) out.push_back(v.complement());
  return Predicate(p.domain(), std::move(out));
}

Predicate smul(const UnitScalar& r, const Predicate& p) {
  std::vector<UnitScalar> out;
  out.reserve(p.size());
  for (const auto& v : p.values()) out.push_back(r * v);
  return Predicate(p.domain(), std::move(out));
}

UnitScalar sup_metric(const Predicate& p, const Predicate& q) {
  require_same_domain(p.domain(), q.domain(), "sup_metric");
  Rational best(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    best = max(best, (p[i].value() - q[i].value()).abs());
  }
  return UnitScalar(best);
}

Predicate SimpleNormalForm::reassemble() const {
  Predicate acc = Predicate::constant(domain, UnitScalar::zero());
  for (const auto& block : blocks) {
    std::vector<bool> members(domain.size());
    for (auto i : block.atoms) members[i] = true;
    auto next = osum(acc, smul(block.coefficient, Predicate::indicator(domain, members)));
    if (!next) throw DomainError("normal form blocks overlap");
    acc = std::move(*next);
  }
  return acc;
}

SimpleNormalForm normal_form(const Predicate& p) {
  SimpleNormalForm nf{p.domain(), {}};
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto it = std::find_if(nf.blocks.begin(), nf.blocks.end(),
                           [&](const NormalFormBlock& b) { return b.coefficient == p[i]; });
    if (it == nf.blocks.end()) {
      nf.blocks.push_back(NormalFormBlock{p[i], {i}});
    } else {
      it->atoms.push_back(i);
    }
  }
  return nf;
}

Predicate decimal_truncate(const Predicate& p, unsigned digits) {
  if (digits == 0) throw DomainError("decimal_truncate: digits must be >= 1");
  const Rational scale = Rational::pow(Rational(10), digits);
  std::vector<UnitScalar> out;
  out.reserve(p.size());
  for (const auto& v : p.values()) out.emplace_back((v.value() * scale).floor() / scale);
  return Predicate(p.domain(), std::move(out));
}

nlohmann::ordered_json to_json(const Predicate& p) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < p.size(); ++i) j[p.domain().atom(i)] = p[i].to_string();
  return j;
}

Predicate predicate_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw FormatError("predicate JSON must be an object");
  std::vector<std::string> atoms;
  std::vector<UnitScalar> values;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw FormatError("predicate value for '" + key + "' must be a \"num/den\" string");
    atoms.push_back(key);
    values.emplace_back(Rational::parse(value.get<std::string>()));
  }
  return Predicate(FinSet(std::move(atoms)), std::move(values));
}

}  // namespace exmon::effect
