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

#include "exmon/monads/laws.hpp"

#include <sstream>

#include "exmon/core/random.hpp"

namespace exmon::monads {

std::string matrix_string(const WeightMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    os << (i ? "," : "") << "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? "," : "") << m[i][j];
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace mutants {

MonadLawHooks squared_sigma() {
  MonadLawHooks h;
  h.sigma = [](const Dist& phi) {
    std::vector<Rational> w = phi.dense();
    Rational total;
    for (auto& x : w) {
      x *= x;
      total += x;
    }
    for (auto& x : w) x /= total;
    return Expectation(phi.domain(), std::move(w));
  };
  return h;
}

MonadLawHooks transposed_compose() {
  MonadLawHooks h;
  h.compose = [](const WeightMatrix& f, const WeightMatrix& g) {
    WeightMatrix p = matrix_product(f, g);
    const std::size_t cols = p.empty() ? 0 : p.front().size();
    WeightMatrix t(cols, std::vector<Rational>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < cols; ++j) t[j][i] = p[i][j];
    }
    return t;
  };
  return h;
}

MonadLawHooks unweighted_mu() {
  MonadLawHooks h;
  h.dist_mu = [](const Convex<Dist>& psi) {
    Convex<Dist> flat = psi;
    const Rational share(1, static_cast<long long>(psi.terms.size()));
    for (auto& [w, _] : flat.terms) w = share;
    return dist_mu(flat);
  };
  return h;
}

}  // namespace mutants

namespace {

// Renders a composite, or the error it raised, so a hook that breaks shapes
// is reported as a failing case.
template <class F>
std::string guarded_string(F&& make) {
  try {
    return matrix_string(make());
  } catch (const std::exception& e) {
    return std::string("error: ") + e.what();
  }
}

FinSet random_set(Rng& rng, const char* prefix) { return FinSet::numbered(1 + rng.below(6), prefix); }

Dist random_dist(Rng& rng, const FinSet& x) { return Dist(x, rng.sparse_simplex(x.size())); }

WeightMatrix random_kernel(Rng& rng, std::size_t rows, std::size_t cols) {
  WeightMatrix m;
  for (std::size_t i = 0; i < rows; ++i) m.push_back(rng.sparse_simplex(cols));
  return m;
}

WeightMatrix identity_matrix(std::size_t n) {
  WeightMatrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

Convex<Dist> random_convex_dist(Rng& rng, const FinSet& x) {
  const std::size_t k = 1 + rng.below(3);
  auto w = rng.simplex(k);
  Convex<Dist> c;
  for (std::size_t i = 0; i < k; ++i) c.terms.emplace_back(w[i], random_dist(rng, x));
  return c;
}

std::string show(const Dist& d) { return to_json(d).dump(); }
std::string show(const Expectation& h) { return to_json(h).dump(); }

std::string show(const Convex<Dist>& c) {
  std::string out;
  for (const auto& [w, d] : c.terms) out += (out.empty() ? "" : " + ") + w.to_string() + "*" + show(d);
  return out;
}

// The true multiplication one level up: flattens a combination of
// combinations by multiplying weights.
Convex<Dist> flatten(const Convex<Convex<Dist>>& c) {
  Convex<Dist> out;
  for (const auto& [w, inner] : c.terms) {
    for (const auto& [v, d] : inner.terms) out.terms.emplace_back(w * v, d);
  }
  return out;
}

}  // namespace

LawReport check_monad_laws(std::uint64_t seed, std::size_t cases, const MonadLawHooks& hooks) {
  LawReport report{"monad laws", {}};
  auto& d_left = report.axiom("D unit: mu(eta(phi)) = phi");
  auto& d_right = report.axiom("D unit: mu(D(eta)(phi)) = phi");
  auto& d_assoc = report.axiom("D associativity: mu(mu(Psi)) = mu(D(mu)(Psi))");
  auto& e_left = report.axiom("E Kleisli unit: eta;f = f");
  auto& e_right = report.axiom("E Kleisli unit: f;eta = f");
  auto& e_assoc = report.axiom("E Kleisli associativity: (f;g);k = f;(g;k)");
  auto& s_unit = report.axiom("sigma unit: sigma(eta_D(x)) = eta_E(x)");
  auto& s_mu = report.axiom("sigma mu-square: sigma(mu_D(Psi)) = mu_E(sigma(D(sigma)(Psi)))");
  auto& s_kleisli = report.axiom("sigma Kleisli square: sigma(f >=>_D g) = sigma.f ; sigma.g");
  auto& t_unit = report.axiom("tau unit: tau(eta_UF(x)) = eta_E(x)");
  auto& t_kleisli = report.axiom("tau Kleisli square: tau(f >=>_UF g) = tau.f ; tau.g");
  auto& t_inf = report.axiom("tau(F)(p) = inf{s : {x : p(x) <= s} in F}");

  Rng base(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    Rng rng = base.fork(c);
    const FinSet x = random_set(rng, "x");
    const FinSet y = random_set(rng, "y");
    const FinSet z = random_set(rng, "z");
    const FinSet w = random_set(rng, "w");
    const std::string tag = "case " + std::to_string(c);

    // D laws.
    const Dist phi = random_dist(rng, x);
    d_left.record_case();
    if (auto got = hooks.dist_mu(Convex<Dist>::point(phi)); !(got == phi)) d_left.record_failure({{tag, show(phi)}, show(phi), show(got)});
    d_right.record_case();
    {
      Convex<Dist> diracs;
      for (const auto& [i, wt] : phi.support()) diracs.terms.emplace_back(wt, dist_unit(i, x));
      if (auto got = hooks.dist_mu(diracs); !(got == phi)) d_right.record_failure({{tag, show(phi)}, show(phi), show(got)});
    }
    d_assoc.record_case();
    {
      Convex<Convex<Dist>> psi3;
      const std::size_t k = 1 + rng.below(3);
      auto ws = rng.simplex(k);
      for (std::size_t i = 0; i < k; ++i) psi3.terms.emplace_back(ws[i], random_convex_dist(rng, x));
      const Dist lhs = hooks.dist_mu(flatten(psi3));
      const Dist rhs = hooks.dist_mu(map_convex(psi3, [&](const Convex<Dist>& inner) { return hooks.dist_mu(inner); }));
      if (!(lhs == rhs)) d_assoc.record_failure({{tag, show(flatten(psi3))}, show(rhs), show(lhs)});
    }

    // E Kleisli laws on weight matrices.
    const WeightMatrix f = random_kernel(rng, x.size(), y.size());
    const WeightMatrix g = random_kernel(rng, y.size(), z.size());
    const WeightMatrix k = random_kernel(rng, z.size(), w.size());
    e_left.record_case();
    if (auto got = guarded_string([&] { return hooks.compose(identity_matrix(x.size()), f); }); got != matrix_string(f)) {
      e_left.record_failure({{tag, matrix_string(f)}, matrix_string(f), got});
    }
    e_right.record_case();
    if (auto got = guarded_string([&] { return hooks.compose(f, identity_matrix(y.size())); }); got != matrix_string(f)) {
      e_right.record_failure({{tag, matrix_string(f)}, matrix_string(f), got});
    }
    e_assoc.record_case();
    {
      const std::string lhs = guarded_string([&] { return hooks.compose(hooks.compose(f, g), k); });
      const std::string rhs = guarded_string([&] { return hooks.compose(f, hooks.compose(g, k)); });
      if (lhs != rhs) e_assoc.record_failure({{tag, matrix_string(f), matrix_string(g), matrix_string(k)}, lhs, rhs});
    }

    // sigma as a monad map.
    const std::size_t point = rng.below(x.size());
    s_unit.record_case();
    if (auto got = hooks.sigma(dist_unit(point, x)); !(got == exp_unit(point, x))) {
      s_unit.record_failure({{tag, x.atom(point)}, show(exp_unit(point, x)), show(got)});
    }
    s_mu.record_case();
    {
      const Convex<Dist> psi = random_convex_dist(rng, x);
      const Expectation lhs = hooks.sigma(hooks.dist_mu(psi));
      const Expectation rhs = mix_states(map_convex(psi, hooks.sigma));
      if (!(lhs == rhs)) s_mu.record_failure({{tag, show(psi)}, show(rhs), show(lhs)});
    }
    s_kleisli.record_case();
    {
      std::vector<Dist> fd;
      std::vector<Dist> gd;
      for (std::size_t i = 0; i < x.size(); ++i) fd.push_back(random_dist(rng, y));
      for (std::size_t i = 0; i < y.size(); ++i) gd.push_back(random_dist(rng, z));
      WeightMatrix sf;
      WeightMatrix sg;
      for (const auto& d : fd) sf.push_back(hooks.sigma(d).weights());
      for (const auto& d : gd) sg.push_back(hooks.sigma(d).weights());
      const std::string rhs = guarded_string([&] { return hooks.compose(sf, sg); });
      WeightMatrix lhs;
      for (const auto& d : fd) {
        Convex<Dist> pushed;
        for (const auto& [j, wt] : d.support()) pushed.terms.emplace_back(wt, gd[j]);
        lhs.push_back(hooks.sigma(hooks.dist_mu(pushed)).weights());
      }
      if (matrix_string(lhs) != rhs) s_kleisli.record_failure({{tag, matrix_string(sf), matrix_string(sg)}, rhs, matrix_string(lhs)});
    }

    // tau as a monad map. UF-Kleisli maps on finite sets are point maps.
    t_unit.record_case();
    if (auto got = hooks.tau(PrincipalUltrafilter(x, point)); !(got == exp_unit(point, x))) {
      t_unit.record_failure({{tag, x.atom(point)}, show(exp_unit(point, x)), show(got)});
    }
    t_kleisli.record_case();
    {
      std::vector<std::size_t> u(x.size());
      std::vector<std::size_t> v(y.size());
      for (auto& p : u) p = rng.below(y.size());
      for (auto& p : v) p = rng.below(z.size());
      WeightMatrix tu;
      WeightMatrix tv;
      for (auto p : u) tu.push_back(hooks.tau(PrincipalUltrafilter(y, p)).weights());
      for (auto p : v) tv.push_back(hooks.tau(PrincipalUltrafilter(z, p)).weights());
      WeightMatrix lhs;
      for (auto p : u) lhs.push_back(hooks.tau(PrincipalUltrafilter(z, v[p])).weights());
      const std::string rhs = guarded_string([&] { return hooks.compose(tu, tv); });
      if (matrix_string(lhs) != rhs) t_kleisli.record_failure({{tag, matrix_string(tu), matrix_string(tv)}, rhs, matrix_string(lhs)});
    }
    t_inf.record_case();
    {
      std::vector<Rational> values;
      for (std::size_t i = 0; i < x.size(); ++i) values.push_back(rng.unit_rational());
      const effect::Predicate p(x, values);
      const PrincipalUltrafilter uf(x, point);
      const UnitScalar lhs = exp_eval(hooks.tau(uf), p);
      const UnitScalar rhs = ultrafilter_integral(uf, p);
      if (!(lhs == rhs)) t_inf.record_failure({{tag, x.atom(point), effect::to_json(p).dump()}, rhs.to_string(), lhs.to_string()});
    }
  }
  return report;
}

LawReport check_measure_bijection(std::uint64_t seed, std::size_t cases, std::size_t max_atoms) {
  if (max_atoms < 1 || max_atoms > kMaxMeasureAtoms) throw DomainError("max_atoms must lie in 1..12");
  LawReport report{"finitely additive measures", {}};
  auto& additive = report.axiom("phi(h) is finitely additive");
  auto& roundtrip = report.axiom("phi_inverse(phi(h)) = h");
  auto& rejected = report.axiom("non-additive table rejected with a disjoint-pair witness");
  const Rng base(seed);
  for (std::size_t c = 0; c < cases; ++c) {
    Rng rng = base.fork(c);
    const FinSet x = FinSet::numbered(1 + rng.below(max_atoms));
    const Expectation h(x, rng.sparse_simplex(x.size()));
    const std::string tag = show(h);
    const MeasureTable m = phi(h);
    additive.record_case();
    if (auto v = is_finitely_additive(m); !v.additive) additive.record_failure({{tag}, "additive", v.witness->describe(x)});
    roundtrip.record_case();
    try {
      if (auto back = phi_inverse(m); !(back == h)) roundtrip.record_failure({{tag}, tag, show(back)});
    } catch (const DomainError& e) {
      roundtrip.record_failure({{tag}, tag, e.what()});
    }
    if (x.size() < 2) continue;
    std::vector<UnitScalar> table = m.table();
    const std::uint64_t w = 1 + rng.below(m.full_mask() - 1);
    const Rational old = table[w].value();
    const Rational delta(1 + static_cast<long long>(rng.below(8)), 16);
    table[w] = UnitScalar(old >= Rational(1, 2) ? old - delta : old + delta);
    const MeasureTable bad(x, table);
    const std::string bad_tag = tag + " with m(" + subset_string(x, w) + ") = " + table[w].value().to_string();
    rejected.record_case();
    try {
      phi_inverse(bad);
      rejected.record_failure({{bad_tag}, "rejection", "accepted"});
    } catch (const NotAdditiveError& e) {
      const AdditivityWitness& wit = e.witness();
      const bool disjoint = wit.kind == AdditivityWitness::Kind::NotAdditive && (wit.first & wit.second) == 0;
      if (!disjoint || bad[wit.first | wit.second].value() == bad[wit.first].value() + bad[wit.second].value()) {
        rejected.record_failure({{bad_tag}, "a disjoint pair violating additivity", wit.describe(x)});
      }
    }
  }
  return report;
}

}  // namespace exmon::monads
