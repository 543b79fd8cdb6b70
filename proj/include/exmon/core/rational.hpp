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

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace exmon {

/// Exact arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long value);  // NOLINT(google-explicit-constructor)
  Rational(long long num, long long den);
  static Rational from_strings(std::string_view num, std::string_view den);

  /// Accepts "n/d" and "n" (optional leading '-').
  static Rational parse(std::string_view text);

  /// 2^exp for exp >= 0, and 2^-(-exp) otherwise.
  static Rational pow2(long exp);
  static Rational pow(const Rational& base, unsigned long exp);

  std::string numerator_string() const;
  std::string denominator_string() const;
  /// Always "num/den", including integers ("3/1").
  std::string to_string() const;
  double to_double() const;

  bool is_integer() const;
  bool is_zero() const { return sgn(value_) == 0; }
  int sign() const { return sgn(value_); }
  /// Largest integer <= this.
  Rational floor() const;
  Rational abs() const;
  /// Fits in a signed 64-bit integer; only meaningful if is_integer().
  bool fits_int64() const;
  std::int64_t to_int64() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a);

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

  const mpq_class& raw() const { return value_; }

 private:
  explicit Rational(mpq_class v);
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// A rational in [0,1]; construction outside the interval throws DomainError.
class UnitScalar {
 public:
  UnitScalar() = default;
  UnitScalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  UnitScalar(long long num, long long den) : UnitScalar(Rational(num, den)) {}

  static UnitScalar zero() { return UnitScalar(); }
  static UnitScalar one() { return UnitScalar(Rational(1)); }

  const Rational& value() const { return value_; }
  operator const Rational&() const { return value_; }  // NOLINT

  /// 1 - value.
  UnitScalar complement() const;
  std::string to_string() const { return value_.to_string(); }

  friend UnitScalar operator*(const UnitScalar& a, const UnitScalar& b);
  friend bool operator==(const UnitScalar& a, const UnitScalar& b) = default;
  friend std::strong_ordering operator<=>(const UnitScalar& a, const UnitScalar& b) {
    return a.value_ <=> b.value_;
  }

 private:
  Rational value_;
};

std::ostream& operator<<(std::ostream& os, const UnitScalar& r);

}  // namespace exmon

template <>
struct std::hash<exmon::Rational> {
  std::size_t operator()(const exmon::Rational& r) const { return r.hash(); }
};
