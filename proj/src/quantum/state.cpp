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

#include "exmon/quantum/state.hpp"

#include <cmath>
#include <cstdio>

namespace exmon::quantum {

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string show(const CMatrix& m) { return to_json(m).dump(); }

/// |k><l| + |l><k| scaled by `phase` on the upper entry and its conjugate on
/// the lower one.
CMatrix hermitian_pair(std::size_t d, std::size_t k, std::size_t l, Complex phase) {
  CMatrix m(d);
  m(k, l) = phase;
  m(l, k) = std::conj(phase);
  return m;
}

}  // namespace

std::vector<StandardEffect> standard_effects(std::size_t d) {
  std::vector<StandardEffect> out;
  const CMatrix id = CMatrix::identity(d);
  for (std::size_t k = 0; k < d; ++k) out.push_back({"E" + std::to_string(k) + std::to_string(k), Effect(CMatrix::unit(d, k, k))});
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = k + 1; l < d; ++l) {
      out.push_back({"X" + std::to_string(k) + std::to_string(l), Effect(0.5 * (id + hermitian_pair(d, k, l, 1.0)))});
    }
  }
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = k + 1; l < d; ++l) {
      out.push_back({"Y" + std::to_string(k) + std::to_string(l), Effect(0.5 * (id + hermitian_pair(d, k, l, Complex(0.0, -1.0))))});
    }
  }
  return out;
}

StateFunctional StateFunctional::of_table(std::size_t dim, std::map<std::string, double> table, double tol) {
  for (const auto& [name, v] : table) {
    if (!(v >= -tol && v <= 1.0 + tol)) throw DomainError("state table value for " + name + " outside [0,1]");
  }
  StateFunctional s;
  s.dim_ = dim;
  s.tol_ = tol;
  s.table_ = std::move(table);
  const auto effects = standard_effects(dim);
  s.f_ = [effects, table = *s.table_, tol](const CMatrix& a) {
    for (const auto& e : effects) {
      if (max_norm(e.effect.matrix() - a) <= tol) {
        auto it = table.find(e.name);
        if (it == table.end()) throw DomainError("state table has no entry for " + e.name);
        return it->second;
      }
    }
    throw DomainError("effect is not in the state table");
  };
  return s;
}

StateFunctional StateFunctional::of_function(std::size_t dim, std::function<double(const CMatrix&)> f) {
  StateFunctional s;
  s.dim_ = dim;
  s.f_ = std::move(f);
  return s;
}

double StateFunctional::operator()(const Effect& a) const {
  if (a.dim() != dim_) throw DomainError("state and effect dimensions differ");
  return f_(a.matrix());
}

StateFunctional state_of_density(const Density& m) {
  StateFunctional s;
  s.dim_ = m.dim();
  s.tol_ = m.tol();
  s.density_ = m;
  const CMatrix mm = m.matrix();
  s.f_ = [mm](const CMatrix& a) { return (mm * a).trace().real(); };
  return s;
}

std::map<std::string, double> tabulate(const StateFunctional& s) {
  std::map<std::string, double> out;
  for (const auto& e : standard_effects(s.dim())) out[e.name] = s(e.effect);
  return out;
}

Density density_from_state(const StateFunctional& s, double tol) {
  const std::size_t d = s.dim();
  std::map<std::string, double> values;
  for (const auto& e : standard_effects(d)) values[e.name] = s(e.effect);
  CMatrix m(d);
  double trace = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    m(k, k) = values.at("E" + std::to_string(k) + std::to_string(k));
    trace += m(k, k).real();
  }
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t l = k + 1; l < d; ++l) {
      const std::string idx = std::to_string(k) + std::to_string(l);
      const double re = values.at("X" + idx) - trace / 2.0;
      const double im = -(values.at("Y" + idx) - trace / 2.0);
      m(k, l) = Complex(re, im);
      m(l, k) = Complex(re, -im);
    }
  }
  return Density(m, tol);
}

CMatrix random_unitary(std::size_t d, Rng& rng) {
  CMatrix u(d);
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<Complex> v(d);
    for (auto& z : v) z = Complex(rng.normal(), rng.normal());
    for (std::size_t p = 0; p < c; ++p) {
      Complex dot = 0.0;
      for (std::size_t r = 0; r < d; ++r) dot += std::conj(u(r, p)) * v[r];
      for (std::size_t r = 0; r < d; ++r) v[r] -= dot * u(r, p);
    }
    double n = 0.0;
    for (const auto& z : v) n += std::norm(z);
    n = std::sqrt(n);
    for (std::size_t r = 0; r < d; ++r) u(r, c) = v[r] / n;
  }
  return u;
}

Density random_density(std::size_t d, Rng& rng) {
  CMatrix g(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  }
  CMatrix m = g * g.adjoint();
  m = (1.0 / m.trace().real()) * m;
  return Density(m.hermitian_part());
}

Effect random_effect(std::size_t d, Rng& rng) {
  std::vector<double> lambda(d);
  for (auto& l : lambda) l = rng.uniform();
  const CMatrix u = random_unitary(d, rng);
  return Effect(u * CMatrix::diagonal(lambda) * u.adjoint());
}

LawReport check_projection_state_additivity(const StateFunctional& s, std::size_t trials, std::uint64_t seed, double tol) {
  const std::size_t d = s.dim();
  const double bound = 10.0 * tol;
  LawReport report{"projection state additivity, dim " + std::to_string(d), {}};
  auto& unit = report.axiom("s(I) = 1");
  auto& zero = report.axiom("s(0) = 0");
  auto& additive = report.axiom("s(P+Q) = s(P) + s(Q) for orthogonal projections P, Q");
  unit.record_case();
  if (const double v = s(Effect::identity(d)); std::abs(v - 1.0) > bound) unit.record_failure({{"I"}, "1", num(v)});
  zero.record_case();
  if (const double v = s(Effect::zero(d)); std::abs(v) > bound) zero.record_failure({{"0"}, "0", num(v)});
  const Rng base(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = base.fork(t);
    // Two forced disjoint nonempty coordinate sets; the rest fall in S, T or neither.
    std::vector<std::size_t> perm(d);
    for (std::size_t i = 0; i < d; ++i) perm[i] = i;
    for (std::size_t i = d; i-- > 1;) std::swap(perm[i], perm[rng.below(i + 1)]);
    std::vector<std::size_t> sa{perm[0]};
    std::vector<std::size_t> ta{perm[1]};
    for (std::size_t i = 2; i < d; ++i) {
      const auto pick = rng.below(3);
      if (pick == 0) sa.push_back(perm[i]);
      if (pick == 1) ta.push_back(perm[i]);
    }
    const CMatrix u = random_unitary(d, rng);
    const Projection p(u * Projection::coordinate(d, sa).matrix() * u.adjoint());
    const Projection q(u * Projection::coordinate(d, ta).matrix() * u.adjoint());
    const Projection pq(p.matrix() + q.matrix());
    additive.record_case();
    const double lhs = s(pq.as_effect());
    const double rhs = s(p.as_effect()) + s(q.as_effect());
    if (std::abs(lhs - rhs) > bound) additive.record_failure({{show(p.matrix()), show(q.matrix())}, num(rhs), num(lhs)});
  }
  return report;
}

LawReport check_state_module_hom(const StateFunctional& s, std::size_t trials, std::uint64_t seed, double tol) {
  const std::size_t d = s.dim();
  const double bound = 10.0 * tol;
  LawReport report{"trace state effect-module homomorphism, dim " + std::to_string(d), {}};
  auto& additive = report.axiom("s(A (+) B) = s(A) + s(B)");
  auto& homogeneous = report.axiom("s(r.A) = r.s(A)");
  const Rng base(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = base.fork(t);
    const Effect a = random_effect(d, rng);
    const double room = std::max(0.0, 1.0 - eigh(a.matrix()).values.front());
    const Effect b = random_effect(d, rng).scale(room * rng.uniform());
    if (auto sum = effect_osum(a, b)) {
      additive.record_case();
      const double lhs = s(*sum);
      const double rhs = s(a) + s(b);
      if (std::abs(lhs - rhs) > bound) additive.record_failure({{show(a.matrix()), show(b.matrix())}, num(rhs), num(lhs)});
    }
    const double r = rng.uniform();
    homogeneous.record_case();
    const double lhs = s(a.scale(r));
    const double rhs = r * s(a);
    if (std::abs(lhs - rhs) > bound) homogeneous.record_failure({{num(r), show(a.matrix())}, num(rhs), num(lhs)});
  }
  return report;
}

LawReport gleason_suite(std::size_t dim, std::size_t trials, std::uint64_t seed, const GleasonTolerances& tols) {
  LawReport report{"gleason, dim " + std::to_string(dim), {}};
  for (const char* name : {"s(I) = 1", "s(0) = 0", "s(P+Q) = s(P) + s(Q) for orthogonal projections P, Q",
                           "s(A (+) B) = s(A) + s(B)", "s(r.A) = r.s(A)"}) {
    report.axiom(name);
  }
  auto& convex = report.axiom("layer cake coefficients sum to 1");
  auto& cake = report.axiom("layer cake reconstructs A: |sum c_i P_i - A|_max");
  auto& tomo = report.axiom("tomography recovers M: |M' - M|_max");
  const Rng base(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng = base.fork(t);
    const Density m = random_density(dim, rng);
    const StateFunctional s = state_of_density(m);
    const std::uint64_t sub = rng.next();
    // The checkers compare against 10 tol.
    for (const LawReport& part : {check_projection_state_additivity(s, 2, sub, tols.state / 10.0),
                                  check_state_module_hom(s, 2, sub, tols.state / 10.0)}) {
      for (const auto& ax : part.axioms) report.axiom(ax.axiom).absorb(ax);
    }

    const Effect a = random_effect(dim, rng);
    const FormalTensor ft = layer_cake(a);
    convex.record_case();
    if (std::abs(ft.coefficient_sum() - 1.0) > tols.reconstruct) convex.record_failure({{show(a.matrix())}, "1", num(ft.coefficient_sum())});
    cake.record_case();
    if (const double err = max_norm(tensor_eval(ft).matrix() - a.matrix()); err > tols.reconstruct) {
      cake.record_failure({{show(a.matrix())}, "<= " + num(tols.reconstruct), num(err)});
    }

    tomo.record_case();
    try {
      const Density back = density_from_state(StateFunctional::of_table(dim, tabulate(s)));
      if (const double err = max_norm(back.matrix() - m.matrix()); err > tols.tomography) {
        tomo.record_failure({{show(m.matrix())}, "<= " + num(tols.tomography), num(err)});
      }
    } catch (const DomainError& e) {
      tomo.record_failure({{show(m.matrix())}, "a density", e.what()});
    }
  }
  return report;
}

}  // namespace exmon::quantum
