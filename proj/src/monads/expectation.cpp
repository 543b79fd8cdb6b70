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

#include "exmon/monads/expectation.hpp"

#include "exmon/core/error.hpp"

namespace exmon::monads {

WeightMatrix matrix_product(const WeightMatrix& f, const WeightMatrix& g) {
  const std::size_t cols = g.empty() ? 0 : g.front().size();
  WeightMatrix out(f.size(), std::vector<Rational>(cols));
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x].size() != g.size()) throw DomainError("matrix_product: inner dimensions differ");
    for (std::size_t y = 0; y < g.size(); ++y) {
      if (f[x][y].is_zero()) continue;
      for (std::size_t z = 0; z < cols; ++z) {
        if (!g[y][z].is_zero()) out[x][z] += f[x][y] * g[y][z];
      }
    }
  }
  return out;
}

Expectation::Expectation(FinSet domain, std::vector<Rational> weights)
    : domain_(std::move(domain)), weights_(std::move(weights)) {
  if (weights_.size() != domain_.size()) throw DomainError("expectation needs one weight per atom");
  Rational total;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < Rational(0)) throw DomainError("negative weight " + weights_[i].to_string() + " at " + domain_.atom(i));
    total += weights_[i];
  }
  if (total != Rational(1)) throw DomainError("expectation of 1 is " + total.to_string() + ", not 1");
}

bool operator==(const Expectation& a, const Expectation& b) {
  return a.domain_ == b.domain_ && a.weights_ == b.weights_;
}

Expectation exp_unit(std::size_t atom, const FinSet& domain) {
  if (atom >= domain.size()) throw DomainError("exp_unit: atom index out of range");
  std::vector<Rational> w(domain.size());
  w[atom] = Rational(1);
  return Expectation(domain, std::move(w));
}

Expectation exp_unit(const std::string& atom, const FinSet& domain) { return exp_unit(domain.index_of(atom), domain); }

UnitScalar exp_eval(const Expectation& h, const effect::Predicate& p) {
  require_same_domain(h.domain(), p.domain(), "exp_eval");
  Rational acc;
  for (std::size_t i = 0; i < p.size(); ++i) acc += h.weight(i) * p[i].value();
  return UnitScalar(acc);
}

Expectation sigma(const Dist& phi) { return Expectation(phi.domain(), phi.dense()); }

Dist sigma_inverse(const Expectation& h) { return Dist(h.domain(), h.weights()); }

RawFunctional embed_continuation(const Expectation& h) {
  return [h](const effect::Predicate& p) { return exp_eval(h, p); };
}

KleisliMap::KleisliMap(FinSet domain, FinSet codomain, std::vector<Expectation> rows)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), rows_(std::move(rows)) {
  if (rows_.size() != domain_.size()) throw DomainError("Kleisli map needs one image per domain atom");
  for (const auto& r : rows_) require_same_domain(r.domain(), codomain_, "KleisliMap");
}

KleisliMap KleisliMap::from_matrix(FinSet domain, FinSet codomain, const WeightMatrix& m) {
  std::vector<Expectation> rows;
  rows.reserve(m.size());
  for (const auto& row : m) rows.emplace_back(codomain, row);
  return KleisliMap(std::move(domain), std::move(codomain), std::move(rows));
}

KleisliMap KleisliMap::identity(const FinSet& domain) {
  std::vector<Expectation> rows;
  for (std::size_t i = 0; i < domain.size(); ++i) rows.push_back(exp_unit(i, domain));
  return KleisliMap(domain, domain, std::move(rows));
}

WeightMatrix KleisliMap::matrix() const {
  WeightMatrix m;
  m.reserve(rows_.size());
  for (const auto& r : rows_) m.push_back(r.weights());
  return m;
}

bool operator==(const KleisliMap& a, const KleisliMap& b) {
  return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.rows_ == b.rows_;
}

KleisliMap kleisli_compose(const KleisliMap& f, const KleisliMap& g) {
  require_same_domain(f.codomain(), g.domain(), "kleisli_compose");
  return KleisliMap::from_matrix(f.domain(), g.codomain(), matrix_product(f.matrix(), g.matrix()));
}

Expectation mix_states(const Convex<Expectation>& states) {
  states.validate();
  const FinSet& domain = states.terms.front().second.domain();
  std::vector<Rational> acc(domain.size());
  for (const auto& [r, h] : states.terms) {
    require_same_domain(domain, h.domain(), "mix_states");
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += r * h.weight(i);
  }
  return Expectation(domain, std::move(acc));
}

UnitScalar barycenter(const Convex<UnitScalar>& phi) {
  phi.validate();
  Rational acc;
  for (const auto& [r, v] : phi.terms) acc += r * v.value();
  return UnitScalar(acc);
}

AffineMap AffineMap::make(Rational slope, Rational intercept) {
  const Rational at_one = slope + intercept;
  if (intercept < Rational(0) || intercept > Rational(1) || at_one < Rational(0) || at_one > Rational(1)) {
    throw DomainError("affine map does not send [0,1] into [0,1]");
  }
  return AffineMap{std::move(slope), std::move(intercept)};
}

UnitScalar AffineMap::operator()(const UnitScalar& t) const { return UnitScalar(slope * t.value() + intercept); }

UnitScalar exp2_iso(const Expectation& h) {
  if (h.domain().size() != 2) throw DomainError("exp2_iso expects a two-atom domain, got " + std::to_string(h.domain().size()));
  return UnitScalar(h.weight(0));
}

Expectation exp2_iso_inverse(const UnitScalar& r, const FinSet& two) {
  if (two.size() != 2) throw DomainError("exp2_iso_inverse expects a two-atom domain");
  return Expectation(two, {r.value(), Rational(1) - r.value()});
}

nlohmann::ordered_json to_json(const Expectation& h) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < h.domain().size(); ++i) j[h.domain().atom(i)] = h.weight(i).to_string();
  return j;
}

Expectation expectation_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw FormatError("expectation JSON must be an object");
  std::vector<std::string> atoms;
  std::vector<Rational> weights;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw FormatError("weight for '" + key + "' must be a \"num/den\" string");
    atoms.push_back(key);
    weights.push_back(Rational::parse(value.get<std::string>()));
  }
  return Expectation(FinSet(std::move(atoms)), std::move(weights));
}

}  // namespace exmon::monads
