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

#include "exmon/core/error.hpp"
#include "exmon/core/finset.hpp"
#include "exmon/core/random.hpp"
#include "exmon/core/rational.hpp"

using exmon::FinSet;
using exmon::Rational;
using exmon::Rng;
using exmon::UnitScalar;

TEST(Rational, CanonicalForm) {
  Rational r(6, -8);
  EXPECT_EQ(r.numerator_string(), "-3");
  EXPECT_EQ(r.denominator_string(), "4");
  EXPECT_EQ(Rational(0, 5).to_string(), "0/1");
  EXPECT_EQ(Rational(7).to_string(), "7/1");
}

TEST(Rational, ParseAcceptsFractionsAndIntegers) {
  EXPECT_EQ(Rational::parse("2/4"), Rational(1, 2));
  EXPECT_EQ(Rational::parse(" -3 "), Rational(-3));
  EXPECT_EQ(Rational::parse("123456789012345678901234567890/2").numerator_string(),
            "61728394506172839450617283945");
  EXPECT_THROW(Rational::parse("1/0"), exmon::FormatError);
  EXPECT_THROW(Rational::parse("x"), exmon::FormatError);
  EXPECT_THROW(Rational::parse("1/"), exmon::FormatError);
}

TEST(Rational, ExactArithmetic) {
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) * Rational(3, 7), Rational(1, 7));
  EXPECT_EQ(Rational(1, 3) / Rational(2, 3), Rational(1, 2));
  EXPECT_THROW(Rational(1) / Rational(0), exmon::DomainError);
  EXPECT_EQ(Rational::pow2(-20), Rational(1, 1048576));
  EXPECT_EQ(Rational(1) - Rational::pow2(-20), Rational(1048575, 1048576));
  EXPECT_EQ(Rational(-7, 2).floor(), Rational(-4));
  EXPECT_EQ(Rational(7, 2).floor(), Rational(3));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
}

TEST(Rational, FieldLawsOnRandomValues) {
  Rng rng(7);
  for (int i = 0; i < 300; ++i) {
    Rational a(rng.range(-50, 50), rng.range(1, 30));
    Rational b(rng.range(-50, 50), rng.range(1, 30));
    Rational c(rng.range(-50, 50), rng.range(1, 30));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, Rational(0));
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
    }
    EXPECT_EQ(Rational::parse(a.to_string()), a);
  }
}

TEST(UnitScalar, RejectsOutOfRange) {
  EXPECT_NO_THROW(UnitScalar(Rational(1)));
  EXPECT_THROW(UnitScalar(Rational(3, 2)), exmon::DomainError);
  EXPECT_THROW(UnitScalar(Rational(-1, 2)), exmon::DomainError);
  EXPECT_EQ(UnitScalar(1, 3).complement(), UnitScalar(2, 3));
}

TEST(FinSet, LabelsAreDistinctAndOrdered) {
  FinSet x({"a", "b", "c"});
  EXPECT_EQ(x.index_of("c"), 2U);
  EXPECT_THROW(x.index_of("z"), exmon::DomainError);
  EXPECT_THROW(FinSet({"a", "a"}), exmon::DomainError);
  EXPECT_EQ(x, FinSet({"a", "b", "c"}));
  EXPECT_FALSE(x == FinSet({"b", "a", "c"}));
}

TEST(Rng, SeedReproducibility) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 50; ++i) EXPECT_EQ(a.next(), b.next());
  Rng c(1);
  auto w = c.simplex(5);
  Rational sum;
  for (auto& v : w) {
    EXPECT_GT(v, Rational(0));
    sum += v;
  }
  EXPECT_EQ(sum, Rational(1));
}
