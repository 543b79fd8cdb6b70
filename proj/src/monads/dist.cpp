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

#include "exmon/monads/dist.hpp"

namespace exmon::monads {

Dist::Dist(FinSet domain, const std::vector<Rational>& weights) : domain_(std::move(domain)) {
  if (weights.size() != domain_.size()) throw DomainError("distribution needs one weight per atom");
  Rational total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < Rational(0)) throw DomainError("negative weight " + weights[i].to_string() + " at " + domain_.atom(i));
    if (weights[i].is_zero()) continue;
    support_.emplace_back(i, weights[i]);
    total += weights[i];
  }
  if (total != Rational(1)) throw DomainError("distribution weights sum to " + total.to_string() + ", not 1");
}

Dist Dist::from_pairs(FinSet domain, const std::vector<std::pair<std::string, Rational>>& weights) {
  std::vector<Rational> dense(domain.size());
  for (const auto& [atom, w] : weights) dense[domain.index_of(atom)] += w;
  return Dist(std::move(domain), dense);
}

Rational Dist::weight(std::size_t atom) const {
  for (const auto& [i, w] : support_) {
    if (i == atom) return w;
  }
  return Rational(0);
}

std::vector<Rational> Dist::dense() const {
  std::vector<Rational> out(domain_.size());
  for (const auto& [i, w] : support_) out[i] = w;
  return out;
}

bool operator==(const Dist& a, const Dist& b) { return a.domain_ == b.domain_ && a.support_ == b.support_; }

Dist dist_unit(std::size_t atom, const FinSet& domain) {
  if (atom >= domain.size()) throw DomainError("dist_unit: atom index out of range");
  std::vector<Rational> w(domain.size());
  w[atom] = Rational(1);
  return Dist(domain, w);
}

Dist dist_unit(const std::string& atom, const FinSet& domain) { return dist_unit(domain.index_of(atom), domain); }

Dist dist_mu(const Convex<Dist>& psi) {
  psi.validate();
  const FinSet& domain = psi.terms.front().second.domain();
  std::vector<Rational> acc(domain.size());
  for (const auto& [outer, phi] : psi.terms) {
    require_same_domain(domain, phi.domain(), "dist_mu");
    for (const auto& [i, w] : phi.support()) acc[i] += outer * w;
  }
  return Dist(domain, acc);
}

Dist dist_bind(const Dist& d, const std::function<Dist(std::size_t)>& f) {
  Convex<Dist> psi;
  for (const auto& [i, w] : d.support()) psi.terms.emplace_back(w, f(i));
  return dist_mu(psi);
}

nlohmann::ordered_json to_json(const Dist& d) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [i, w] : d.support()) j[d.domain().atom(i)] = w.to_string();
  return j;
}

Dist dist_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw FormatError("distribution JSON must be an object");
  std::vector<std::string> atoms;
  std::vector<Rational> weights;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw FormatError("weight for '" + key + "' must be a \"num/den\" string");
    atoms.push_back(key);
    weights.push_back(Rational::parse(value.get<std::string>()));
  }
  return Dist(FinSet(std::move(atoms)), weights);
}

}  // namespace exmon::monads
