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

#include <map>

#include "exmon/core/error.hpp"
#include "exmon/core/random.hpp"
#include "exmon/effect/predicate.hpp"

using exmon::FinSet;
using exmon::Rational;
using exmon::Rng;
using exmon::UnitScalar;
using namespace exmon::effect;

namespace {

const FinSet kAB({"a", "b"});
const FinSet kABC({"a", "b", "c"});

Predicate pred(const FinSet& x, std::vector<Rational> v) { return Predicate(x, v); }

Predicate random_pred(const FinSet& x, Rng& rng) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < x.size(); ++i) v.push_back(rng.unit_rational(8));
  return Predicate(x, v);
}

}  // namespace

TEST(Osum, DefinedPointwiseSum) {
  auto s = osum(pred(kAB, {Rational(1, 2), Rational(1, 2)}), pred(kAB, {Rational(1, 4), Rational(1, 2)}));
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s, pred(kAB, {Rational(3, 4), Rational(1)}));
}

TEST(Osum, UndefinedWhenBoundExceeded) {
  EXPECT_FALSE(osum(pred(kAB, {Rational(3, 4), 0}), pred(kAB, {Rational(1, 2), 0})).has_value());
}

TEST(Osum, ZeroIsNeutral) {
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    auto q = random_pred(kABC, rng);
    EXPECT_EQ(osum(Predicate::constant(kABC, UnitScalar::zero()), q), q);
  }
}

TEST(Osum, DomainMismatchIsAnErrorNotAbsence) {
  EXPECT_THROW(osum(Predicate::constant(kAB, UnitScalar::zero()), Predicate::constant(kABC, UnitScalar::zero())),
               exmon::DomainError);
}

TEST(Ortho, Examples) {
  EXPECT_EQ(ortho(pred(kAB, {Rational(1, 3), 1})), pred(kAB, {Rational(2, 3), 0}));
  EXPECT_EQ(ortho(Predicate::constant(kAB, UnitScalar::one())), Predicate::constant(kAB, UnitScalar::zero()));
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    auto p = random_pred(kABC, rng);
    EXPECT_EQ(ortho(ortho(p)), p);
  }
}

TEST(Ortho, SumWithOrthoIsOneAndUnique) {
  Rng rng(11);
  const auto one = Predicate::constant(kABC, UnitScalar::one());
  for (int i = 0; i < 200; ++i) {
    auto p = random_pred(kABC, rng);
    auto q = random_pred(kABC, rng);
    EXPECT_EQ(osum(p, ortho(p)), one);
    if (auto s = osum(p, q); s && *s == one) {
      EXPECT_EQ(q, ortho(p));
    }
    EXPECT_EQ(osum(p, one).has_value(), p.is_constant(UnitScalar::zero()));
  }
}

TEST(Smul, Examples) {
  auto p = pred(kAB, {Rational(1, 3), 1});
  EXPECT_EQ(smul(UnitScalar::one(), p), p);
  EXPECT_EQ(smul(UnitScalar::zero(), p), Predicate::constant(kAB, UnitScalar::zero()));
  EXPECT_EQ(smul(UnitScalar(1, 2), p), pred(kAB, {Rational(1, 6), Rational(1, 2)}));
}

TEST(SupMetric, Examples) {
  auto p = pred(kAB, {Rational(1, 2), 0});
  EXPECT_EQ(sup_metric(p, p), UnitScalar::zero());
  // max(|1/2-1/4|, |0-1/2|) = max(1/4, 1/2)
  EXPECT_EQ(sup_metric(p, pred(kAB, {Rational(1, 4), Rational(1, 2)})), UnitScalar(1, 2));
  auto half = Predicate::constant(kAB, UnitScalar(1, 2));
  EXPECT_EQ(sup_metric(half, ortho(half)), UnitScalar::zero());
  EXPECT_THROW(sup_metric(p, Predicate::constant(kABC, UnitScalar::zero())), exmon::DomainError);
}

TEST(SupMetric, IsAMetric) {
  Rng rng(19);
  for (int i = 0; i < 300; ++i) {
    auto p = random_pred(kABC, rng);
    auto q = random_pred(kABC, rng);
    auto r = random_pred(kABC, rng);
    EXPECT_EQ(sup_metric(p, q).value().is_zero(), p == q);
    EXPECT_EQ(sup_metric(p, q), sup_metric(q, p));
    EXPECT_LE(sup_metric(p, r).value(), sup_metric(p, q).value() + sup_metric(q, r).value());
  }
}

TEST(NormalForm, ConstantIsOneBlock) {
  auto nf = normal_form(Predicate::constant(kABC, UnitScalar(2, 5)));
  ASSERT_EQ(nf.blocks.size(), 1U);
  EXPECT_EQ(nf.blocks[0].coefficient, UnitScalar(2, 5));
  EXPECT_EQ(nf.blocks[0].atoms, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(NormalForm, GroupsByValue) {
  auto nf = normal_form(pred(kABC, {Rational(1, 2), Rational(1, 2), 1}));
  ASSERT_EQ(nf.blocks.size(), 2U);
  EXPECT_EQ(nf.blocks[0].coefficient, UnitScalar(1, 2));
  EXPECT_EQ(nf.blocks[0].atoms, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(nf.blocks[1].coefficient, UnitScalar::one());
  EXPECT_EQ(nf.blocks[1].atoms, (std::vector<std::size_t>{2}));
}

TEST(NormalForm, DistinctValuesGiveSingletons) {
  auto nf = normal_form(pred(kABC, {Rational(1, 5), Rational(2, 5), Rational(3, 5)}));
  ASSERT_EQ(nf.blocks.size(), 3U);
  for (const auto& b : nf.blocks) EXPECT_EQ(b.atoms.size(), 1U);
}

// Group-by-value oracle built with std::map, independent of normal_form.
TEST(NormalForm, RoundTripAndPartitionUpToEightAtoms) {
  Rng rng(23);
  for (std::size_t n = 1; n <= 8; ++n) {
    const FinSet x = FinSet::numbered(n);
    for (int i = 0; i < 40; ++i) {
      std::vector<Rational> v;
      for (std::size_t k = 0; k < n; ++k) v.push_back(rng.unit_rational(3));
      Predicate p(x, v);
      auto nf = normal_form(p);
      EXPECT_EQ(nf.reassemble(), p);

      std::map<Rational, std::vector<std::size_t>> oracle;
      for (std::size_t k = 0; k < n; ++k) oracle[v[k]].push_back(k);
      ASSERT_EQ(nf.blocks.size(), oracle.size());
      for (const auto& b : nf.blocks) EXPECT_EQ(oracle.at(b.coefficient.value()), b.atoms);
    }
  }
}

TEST(DecimalTruncate, Examples) {
  const FinSet x({"a"});
  EXPECT_EQ(decimal_truncate(pred(x, {Rational(1, 3)}), 2), pred(x, {Rational(33, 100)}));
  for (unsigned n = 1; n < 6; ++n) {
    EXPECT_EQ(decimal_truncate(pred(x, {Rational(1, 2)}), n), pred(x, {Rational(1, 2)}));
    EXPECT_EQ(decimal_truncate(pred(x, {Rational(1)}), n), pred(x, {Rational(1)}));
  }
  EXPECT_THROW(decimal_truncate(pred(x, {Rational(1)}), 0), exmon::DomainError);
}

TEST(DecimalTruncate, BelowAndWithinTenToTheMinusN) {
  Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> v;
    for (int k = 0; k < 3; ++k) v.push_back(rng.unit_rational(97));
    Predicate p(kABC, v);
    const unsigned n = 1 + static_cast<unsigned>(rng.below(5));
    auto t = decimal_truncate(p, n);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_LE(t[k].value(), p[k].value());
    EXPECT_LT(sup_metric(p, t).value(), Rational::pow(Rational(1, 10), n));
  }
}

TEST(PredicateJson, RoundTripPreservesAtomOrder) {
  auto p = pred(FinSet({"z", "a"}), {Rational(1, 3), Rational(1)});
  auto j = to_json(p);
  EXPECT_EQ(j.dump(), R"({"z":"1/3","a":"1/1"})");
  EXPECT_EQ(predicate_from_json(j), p);
  EXPECT_THROW(predicate_from_json(nlohmann::ordered_json::parse(R"({"a":"3/2"})")), exmon::DomainError);
  EXPECT_THROW(predicate_from_json(nlohmann::ordered_json::parse(R"({"a":0.5})")), exmon::FormatError);
}
