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

#include "exmon/core/rational.hpp"

#include <cmath>
#include <limits>

#include "exmon/core/error.hpp"

namespace exmon {

namespace {

mpz_class parse_integer(std::string_view text) {
  if (text.empty()) throw FormatError("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw FormatError("malformed integer literal '" + std::string(text) + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9') {
      throw FormatError("malformed integer literal '" + std::string(text) + "'");
    }
  }
  std::string digits(text[0] == '+' ? text.substr(1) : text);
  return mpz_class(digits, 10);
}

}  // namespace

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational::Rational(long long value) {
  mpz_class n;
  mpz_set_si(n.get_mpz_t(), static_cast<long>(value));
  value_ = mpq_class(n);
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  mpz_class n;
  mpz_class d;
  mpz_set_si(n.get_mpz_t(), static_cast<long>(num));
  mpz_set_si(d.get_mpz_t(), static_cast<long>(den));
  value_ = mpq_class(n, d);
  value_.canonicalize();
}

Rational Rational::from_strings(std::string_view num, std::string_view den) {
  mpz_class n = parse_integer(num);
  mpz_class d = parse_integer(den);
  if (d == 0) throw FormatError("rational with zero denominator");
  return Rational(mpq_class(n, d));
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_strings(text, "1");
  return from_strings(trim(text.substr(0, slash)), trim(text.substr(slash + 1)));
}

Rational Rational::pow2(long exp) {
  mpz_class p = 1;
  const unsigned long e = static_cast<unsigned long>(exp < 0 ? -exp : exp);
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), e);
  return exp < 0 ? Rational(mpq_class(mpz_class(1), p)) : Rational(mpq_class(p));
}

Rational Rational::pow(const Rational& base, unsigned long exp) {
  mpz_class n;
  mpz_class d;
  mpz_pow_ui(n.get_mpz_t(), base.value_.get_num_mpz_t(), exp);
  mpz_pow_ui(d.get_mpz_t(), base.value_.get_den_mpz_t(), exp);
  return Rational(mpq_class(n, d));
}

std::string Rational::numerator_string() const { return value_.get_num().get_str(10); }
std::string Rational::denominator_string() const { return value_.get_den().get_str(10); }

std::string Rational::to_string() const {
  return numerator_string() + "/" + denominator_string();
}

double Rational::to_double() const { return value_.get_d(); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

bool Rational::fits_int64() const {
  const mpz_class& n = value_.get_num();
  static const mpz_class lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const mpz_class hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return n >= lo && n <= hi;
}

std::int64_t Rational::to_int64() const {
  if (!is_integer() || !fits_int64()) throw DomainError("rational " + to_string() + " is not a 64-bit integer");
  return std::stoll(numerator_string());
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

std::size_t Rational::hash() const {
  const std::size_t hn = std::hash<std::string>{}(numerator_string());
  const std::size_t hd = std::hash<std::string>{}(denominator_string());
  return hn ^ (hd + 0x9e3779b97f4a7c15ULL + (hn << 6) + (hn >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

UnitScalar::UnitScalar(const Rational& value) : value_(value) {
  if (value_ < Rational(0) || value_ > Rational(1)) {
    throw DomainError("scalar " + value_.to_string() + " outside [0,1]");
  }
}

UnitScalar UnitScalar::complement() const { return UnitScalar(Rational(1) - value_); }

UnitScalar operator*(const UnitScalar& a, const UnitScalar& b) {
  return UnitScalar(a.value_ * b.value_);
}

std::ostream& operator<<(std::ostream& os, const UnitScalar& r) { return os << r.value(); }

}  // namespace exmon
