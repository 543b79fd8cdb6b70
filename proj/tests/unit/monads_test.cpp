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

#include <gtest/gtest.h>

#include <set>

#include "exmon/core/random.hpp"
#include "exmon/effect/laws.hpp"
#include "exmon/monads/laws.hpp"
#include "exmon/monads/measure.hpp"

using exmon::FinSet;
using exmon::Rational;
using exmon::Rng;
using exmon::UnitScalar;
using exmon::effect::Predicate;
using namespace exmon::monads;

namespace {

const FinSet kAB({"a", "b"});
const FinSet kABC({"a", "b", "c"});

Rational r(long long n, long long d = 1) { return Rational(n, d); }

// The three-state chain a -> 1/2 b + 1/2 c, b -> 1/3 b + 2/3 c, c -> 1 c.
KleisliMap chain_step() {
  return KleisliMap::from_matrix(kABC, kABC, {{r(0), r(1, 2), r(1, 2)}, {r(0), r(1, 3), r(2, 3)}, {r(0), r(0), r(1)}});
}

// Sums the probability of every length-`steps` path from `start` ending in
// `target`, by explicit enumeration.
Rational path_enumeration(const WeightMatrix& m, std::size_t start, std::size_t target, int steps) {
  if (steps == 0) return start == target ? Rational(1) : Rational(0);
  Rational total;
  for (std::size_t next = 0; next < m[start].size(); ++next) {
    if (!m[start][next].is_zero()) total += m[start][next] * path_enumeration(m, next, target, steps - 1);
  }
  return total;
}

KleisliMap random_map(Rng& rng, const FinSet& x, const FinSet& y) {
  WeightMatrix m;
  for (std::size_t i = 0; i < x.size(); ++i) m.push_back(rng.sparse_simplex(y.size()));
  return KleisliMap::from_matrix(x, y, m);
}

Expectation random_expectation(Rng& rng, const FinSet& x) { return Expectation(x, rng.sparse_simplex(x.size())); }

Predicate random_predicate(Rng& rng, const FinSet& x) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < x.size(); ++i) v.push_back(rng.unit_rational());
  return Predicate(x, v);
}

}  // namespace

TEST(Dist, InvariantsAndUnit) {
  EXPECT_THROW(Dist(kAB, {r(1, 2), r(1, 3)}), exmon::DomainError);
  EXPECT_THROW(Dist(kAB, {r(3, 2), r(-1, 2)}), exmon::DomainError);
  Dist d(kABC, {r(1, 2), r(0), r(1, 2)});
  EXPECT_EQ(d.support().size(), 2U);
  EXPECT_EQ(dist_unit("a", kAB).weight(0), r(1));
  EXPECT_THROW(dist_unit("z", kAB), exmon::DomainError);
}

TEST(Dist, BindUnitLaws) {
  Rng rng(1);
  std::vector<Dist> images;
  for (int i = 0; i < 3; ++i) images.emplace_back(kAB, rng.simplex(2));
  auto f = [&](std::size_t i) { return images[i]; };
  for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(dist_bind(dist_unit(x, kABC), f), images[x]);
  Dist d(kABC, rng.simplex(3));
  EXPECT_EQ(dist_bind(d, [&](std::size_t i) { return dist_unit(i, kABC); }), d);
}

TEST(DistMu, Examples) {
  Dist phi(kAB, {r(1, 3), r(2, 3)});
  EXPECT_EQ(dist_mu(Convex<Dist>::point(phi)), phi);
  EXPECT_EQ(dist_mu(Convex<Dist>::of({{r(1, 2), dist_unit("a", kAB)}, {r(1, 2), dist_unit("b", kAB)}})),
            Dist(kAB, {r(1, 2), r(1, 2)}));
  // 1/2 (1/2 a + 1/2 b) + 1/2 (1 b) = 1/4 a + 3/4 b
  EXPECT_EQ(dist_mu(Convex<Dist>::of({{r(1, 2), Dist(kAB, {r(1, 2), r(1, 2)})}, {r(1, 2), dist_unit("b", kAB)}})),
            Dist(kAB, {r(1, 4), r(3, 4)}));
  EXPECT_THROW(dist_mu(Convex<Dist>::of({{r(1, 2), dist_unit("a", kAB)}, {r(1, 2), dist_unit("a", kABC)}})),
               exmon::DomainError);
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma(dist_unit("b", kABC)), exp_unit("b", kABC));
  const Dist half_bc(kABC, {r(0), r(1, 2), r(1, 2)});
  EXPECT_EQ(exp_eval(sigma(half_bc), Predicate::indicator(kABC, {false, false, true})), UnitScalar(1, 2));
  const Dist third_bc(kABC, {r(0), r(1, 3), r(2, 3)});
  EXPECT_EQ(exp_eval(sigma(third_bc), Predicate::indicator(kABC, {false, true, false})), UnitScalar(1, 3));
  EXPECT_EQ(sigma_inverse(sigma(third_bc)), third_bc);
}

TEST(Sigma, InjectiveOnSmallDomains) {
  // All distributions on 3 atoms with weights in multiples of 1/4.
  std::set<std::vector<Rational>> seen;
  int count = 0;
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; a + b <= 4; ++b) {
      Dist d(kABC, {r(a, 4), r(b, 4), r(4 - a - b, 4)});
      EXPECT_TRUE(seen.insert(sigma(d).weights()).second);
      ++count;
    }
  }
  EXPECT_EQ(count, 15);
}

TEST(Tau, PrincipalIsDiracAndMatchesInfFormula) {
  Rng rng(2);
  for (std::size_t point = 0; point < 3; ++point) {
    PrincipalUltrafilter f(kABC, point);
    EXPECT_EQ(tau(f), exp_unit(point, kABC));
    EXPECT_EQ(tau(f), sigma(dist_unit(point, kABC)));
    for (int i = 0; i < 50; ++i) {
      auto p = random_predicate(rng, kABC);
      EXPECT_EQ(ultrafilter_integral(f, p), p[point]);
      EXPECT_EQ(exp_eval(tau(f), p), ultrafilter_integral(f, p));
    }
  }
  EXPECT_THROW(PrincipalUltrafilter(kAB, 2), exmon::DomainError);
}

TEST(Tau, InjectiveOnFiniteDomains) {
  std::set<std::vector<Rational>> seen;
  for (std::size_t point = 0; point < 3; ++point) EXPECT_TRUE(seen.insert(tau(PrincipalUltrafilter(kABC, point)).weights()).second);
}

TEST(ExpEval, Examples) {
  Rng rng(3);
  auto p = random_predicate(rng, kABC);
  for (std::size_t x = 0; x < 3; ++x) EXPECT_EQ(exp_eval(exp_unit(x, kABC), p), p[x]);
  EXPECT_EQ(exp_eval(Expectation(kAB, {r(1, 2), r(1, 2)}), Predicate(kAB, std::vector<Rational>{r(1), r(0)})), UnitScalar(1, 2));
  // 1/4 * 1/3 + 3/4 * 1/2 = 1/12 + 3/8
  EXPECT_EQ(exp_eval(Expectation(kAB, {r(1, 4), r(3, 4)}), Predicate(kAB, std::vector<Rational>{r(1, 3), r(1, 2)})),
            UnitScalar(11, 24));
  EXPECT_THROW(exp_eval(exp_unit(0, kAB), p), exmon::DomainError);
}

TEST(ExpEval, IsAnEffectModuleHomomorphism) {
  Rng rng(4);
  const FinSet x = FinSet::numbered(4);
  auto src = exmon::effect::catalog::predicate_module(x);
  auto dst = exmon::effect::catalog::unit_interval_module();
  for (int i = 0; i < 20; ++i) {
    const Expectation h = random_expectation(rng, x);
    auto f = [&](const exmon::effect::Element& e) {
      return exmon::effect::scalar_element(exp_eval(h, exmon::effect::to_predicate(x, e)).value());
    };
    auto report = exmon::effect::check_hom(f, src, dst, static_cast<std::uint64_t>(i), 50);
    EXPECT_TRUE(report.passed()) << exmon::to_json(report).dump(2);
  }
}

TEST(Continuation, AgreesWithExpEval) {
  Rng rng(5);
  const Expectation h(kABC, {r(1, 6), r(1, 3), r(1, 2)});
  auto k = embed_continuation(h);
  for (int i = 0; i < 3; ++i) {
    auto p = random_predicate(rng, kABC);
    EXPECT_EQ(k(p), exp_eval(h, p));
  }
}

TEST(Kleisli, WorkedChainExample) {
  const KleisliMap step = chain_step();
  const auto chi_c = Predicate::indicator(kABC, {false, false, true});
  EXPECT_EQ(exp_eval(step(0), chi_c), UnitScalar(1, 2));
  EXPECT_EQ(exp_eval(step(1), chi_c), UnitScalar(2, 3));
  const KleisliMap two = kleisli_compose(step, step);
  // 1/2 * 2/3 + 1/2 * 1
  EXPECT_EQ(exp_eval(two(0), chi_c), UnitScalar(5, 6));
  EXPECT_EQ(two(0).weight(2), path_enumeration(step.matrix(), 0, 2, 2));
  for (std::size_t s = 0; s < 3; ++s) {
    for (std::size_t t = 0; t < 3; ++t) EXPECT_EQ(two(s).weight(t), path_enumeration(step.matrix(), s, t, 2));
  }
}

TEST(Kleisli, UnitAndAssociativityOnRandomMaps) {
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    auto f = random_map(rng, kABC, kABC);
    auto g = random_map(rng, kABC, kABC);
    auto k = random_map(rng, kABC, kABC);
    EXPECT_EQ(kleisli_compose(f, KleisliMap::identity(kABC)), f);
    EXPECT_EQ(kleisli_compose(KleisliMap::identity(kABC), f), f);
    EXPECT_EQ(kleisli_compose(kleisli_compose(f, g), k), kleisli_compose(f, kleisli_compose(g, k)));
  }
  EXPECT_THROW(kleisli_compose(random_map(rng, kAB, kAB), random_map(rng, kABC, kAB)), exmon::DomainError);
}

TEST(Phi, Examples) {
  const Expectation h(kAB, {r(1, 4), r(3, 4)});
  const MeasureTable m = phi(h);
  EXPECT_EQ(m[0], UnitScalar::zero());
  EXPECT_EQ(m[m.full_mask()], UnitScalar::one());
  EXPECT_EQ(m[1], UnitScalar(1, 4));
  EXPECT_TRUE(is_finitely_additive(m).additive);
  EXPECT_THROW(phi(exp_unit(0, FinSet::numbered(13))), exmon::DomainError);
}

TEST(Phi, RoundTripsOnFiveAtoms) {
  Rng rng(7);
  const FinSet x = FinSet::numbered(5);
  for (int i = 0; i < 100; ++i) {
    const Expectation h = random_expectation(rng, x);
    const MeasureTable m = phi(h);
    EXPECT_EQ(phi_inverse(m), h);
    EXPECT_EQ(phi(phi_inverse(m)), m);
    // Each entry is h applied to the subset's indicator.
    for (std::uint64_t u = 0; u <= m.full_mask(); ++u) EXPECT_EQ(m[u], exp_eval(h, Predicate::indicator_of_mask(x, u)));
  }
}

TEST(PhiInverse, Examples) {
  EXPECT_EQ(phi_inverse(phi(exp_unit("a", kAB))), exp_unit("a", kAB));
  const Expectation h(kABC, {r(1, 2), r(1, 3), r(1, 6)});
  EXPECT_EQ(phi_inverse(phi(h)).weights(), h.weights());
}

TEST(PhiInverse, RejectsNonAdditiveTableWithWitness) {
  std::vector<UnitScalar> t = phi(Expectation(kABC, {r(1, 2), r(1, 3), r(1, 6)})).table();
  t[0b011] = UnitScalar(1, 2);  // should be 5/6
  const MeasureTable bad(kABC, t);
  auto verdict = is_finitely_additive(bad);
  ASSERT_FALSE(verdict.additive);
  EXPECT_EQ(verdict.witness->kind, AdditivityWitness::Kind::NotAdditive);
  EXPECT_EQ(verdict.witness->first, 0b001U);
  EXPECT_EQ(verdict.witness->second, 0b010U);
  try {
    phi_inverse(bad);
    FAIL() << "expected rejection";
  } catch (const NotAdditiveError& e) {
    EXPECT_EQ(e.witness().first, 0b001U);
    EXPECT_EQ(e.witness().second, 0b010U);
    EXPECT_NE(std::string(e.what()).find("m({a,b}) != m({a}) + m({b})"), std::string::npos);
  }
}

TEST(PhiInverse, RejectsBadEmptyAndFull) {
  std::vector<UnitScalar> t = phi(exp_unit(0, kAB)).table();
  t[0] = UnitScalar(1, 5);
  EXPECT_EQ(is_finitely_additive(MeasureTable(kAB, t)).witness->kind, AdditivityWitness::Kind::EmptyNotZero);
  t = phi(exp_unit(0, kAB)).table();
  t[3] = UnitScalar(1, 2);
  EXPECT_EQ(is_finitely_additive(MeasureTable(kAB, t)).witness->kind, AdditivityWitness::Kind::FullNotOne);
}

TEST(MeasureJson, RoundTrip) {
  const MeasureTable m = phi(Expectation(kAB, {r(1, 4), r(3, 4)}));
  const auto j = to_json(m);
  EXPECT_EQ(j.dump(), R"({"atoms":["a","b"],"table":{"0x0":"0/1","0x1":"1/4","0x2":"3/4","0x3":"1/1"}})");
  EXPECT_EQ(measure_from_json(j), m);
  auto missing = j;
  missing["table"].erase("0x2");
  EXPECT_THROW(measure_from_json(missing), exmon::FormatError);
}

TEST(ExpectationJson, RoundTrip) {
  const Expectation h(FinSet({"q", "p"}), {r(0), r(1)});
  EXPECT_EQ(to_json(h).dump(), R"({"q":"0/1","p":"1/1"})");
  EXPECT_EQ(expectation_from_json(to_json(h)), h);
  EXPECT_EQ(to_json(sigma_inverse(h)).dump(), R"({"p":"1/1"})");
}

TEST(MonadLaws, SeededCasesPass) {
  auto report = check_monad_laws(42, 300);
  EXPECT_TRUE(report.passed()) << exmon::to_json(report).dump(2);
  for (const auto& ax : report.axioms) EXPECT_EQ(ax.cases, 300U) << ax.axiom;
}

TEST(MonadLaws, SquaredSigmaBreaksMuSquare) {
  auto report = check_monad_laws(42, 200, mutants::squared_sigma());
  const auto* ax = report.find("sigma mu-square: sigma(mu_D(Psi)) = mu_E(sigma(D(sigma)(Psi)))");
  ASSERT_NE(ax, nullptr);
  EXPECT_FALSE(ax->passed());
  EXPECT_FALSE(ax->failures.empty());
  EXPECT_TRUE(report.find("sigma unit: sigma(eta_D(x)) = eta_E(x)")->passed());
}

TEST(MonadLaws, TransposedComposeBreaksAssociativity) {
  auto report = check_monad_laws(42, 200, mutants::transposed_compose());
  const auto* ax = report.find("E Kleisli associativity: (f;g);k = f;(g;k)");
  ASSERT_NE(ax, nullptr);
  EXPECT_FALSE(ax->passed());
  ASSERT_FALSE(ax->failures.empty());
  EXPECT_EQ(ax->failures[0].inputs.size(), 4U);
}

TEST(MonadLaws, UnweightedMuBreaksDistLaws) {
  auto report = check_monad_laws(42, 200, mutants::unweighted_mu());
  EXPECT_FALSE(report.find("D unit: mu(D(eta)(phi)) = phi")->passed());
  EXPECT_TRUE(report.find("D unit: mu(eta(phi)) = phi")->passed());
}

TEST(Barycenter, Examples) {
  EXPECT_EQ(barycenter(Convex<UnitScalar>::point(UnitScalar(2, 7))), UnitScalar(2, 7));
  EXPECT_EQ(barycenter(Convex<UnitScalar>::of({{r(1, 2), UnitScalar::zero()}, {r(1, 2), UnitScalar::one()}})), UnitScalar(1, 2));
  const auto phi = Convex<UnitScalar>::of({{r(1, 4), UnitScalar(1, 3)}, {r(3, 4), UnitScalar(2, 3)}});
  EXPECT_EQ(barycenter(phi), UnitScalar(7, 12));
  const AffineMap q = AffineMap::make(r(1, 2), r(1, 4));
  // q(7/12) = 13/24 = 1/4 q(1/3) + 3/4 q(2/3)
  EXPECT_EQ(q(barycenter(phi)), UnitScalar(13, 24));
  EXPECT_EQ(r(1, 4) * q(UnitScalar(1, 3)).value() + r(3, 4) * q(UnitScalar(2, 3)).value(), r(13, 24));
  EXPECT_THROW(AffineMap::make(r(1), r(1, 2)), exmon::DomainError);
}

TEST(MixStates, Examples) {
  const Expectation h(kAB, {r(1, 5), r(4, 5)});
  EXPECT_EQ(mix_states(Convex<Expectation>::point(h)), h);
  EXPECT_EQ(mix_states(Convex<Expectation>::of({{r(1, 2), exp_unit(0, kAB)}, {r(1, 2), exp_unit(1, kAB)}})),
            Expectation(kAB, {r(1, 2), r(1, 2)}));
  EXPECT_THROW(mix_states(Convex<Expectation>::of({{r(1, 2), exp_unit(0, kAB)}, {r(1, 2), exp_unit(0, kABC)}})),
               exmon::DomainError);
}

TEST(MixStates, EvaluationIdentity) {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const std::size_t k = 1 + rng.below(4);
    auto ws = rng.simplex(k);
    Convex<Expectation> states;
    for (std::size_t j = 0; j < k; ++j) states.terms.emplace_back(ws[j], random_expectation(rng, kABC));
    const auto p = random_predicate(rng, kABC);
    Rational rhs;
    for (const auto& [w, h] : states.terms) rhs += w * exp_eval(h, p).value();
    EXPECT_EQ(exp_eval(mix_states(states), p).value(), rhs);
  }
}

TEST(Exp2Iso, ExamplesAndRoundTrip) {
  EXPECT_EQ(exp2_iso(exp_unit(0, kAB)), UnitScalar::one());
  EXPECT_EQ(exp2_iso(Expectation(kAB, {r(1, 2), r(1, 2)})), UnitScalar(1, 2));
  EXPECT_THROW(exp2_iso(exp_unit(0, kABC)), exmon::DomainError);
  Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const UnitScalar v(rng.unit_rational(1000));
    EXPECT_EQ(exp2_iso(exp2_iso_inverse(v, kAB)), v);
    const Expectation h = exp2_iso_inverse(v, kAB);
    EXPECT_EQ(exp2_iso_inverse(exp2_iso(h), kAB), h);
  }
}

TEST(MeasureBijection, RandomTablesRoundTripAndPlantedOnesAreRejected) {
  auto report = check_measure_bijection(3, 300);
  EXPECT_TRUE(report.passed()) << exmon::to_json(report).dump(2);
  EXPECT_EQ(report.find("phi_inverse(phi(h)) = h")->cases, 300U);
  EXPECT_GT(report.find("non-additive table rejected with a disjoint-pair witness")->cases, 250U);
  EXPECT_THROW(check_measure_bijection(3, 1, 13), exmon::DomainError);
}
