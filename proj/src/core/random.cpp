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

#include "exmon/core/random.hpp"

#include <cmath>
#include <numbers>

#include "exmon/core/error.hpp"

namespace exmon {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw DomainError("Rng::below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x = next();
  while (x >= limit) x = next();
  return x % n;
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(span == 0 ? next() : below(span));
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Rational Rng::unit_rational(std::uint64_t max_den) {
  const auto den = static_cast<long long>(1 + below(max_den));
  const auto k = static_cast<long long>(below(static_cast<std::uint64_t>(den) + 1));
  return Rational(k, den);
}

std::vector<Rational> Rng::simplex(std::size_t n, std::uint64_t max_part) {
  std::vector<long long> parts(n);
  long long total = 0;
  for (auto& p : parts) {
    p = static_cast<long long>(1 + below(max_part));
    total += p;
  }
  std::vector<Rational> out;
  out.reserve(n);
  for (auto p : parts) out.emplace_back(p, total);
  return out;
}

std::vector<Rational> Rng::sparse_simplex(std::size_t n, std::uint64_t max_part) {
  std::vector<long long> parts(n);
  long long total = 0;
  for (auto& p : parts) {
    p = below(4) == 0 ? 0 : static_cast<long long>(1 + below(max_part));
    total += p;
  }
  if (total == 0) {
    parts[below(n)] = 1;
    total = 1;
  }
  std::vector<Rational> out;
  out.reserve(n);
  for (auto p : parts) out.emplace_back(p, total);
  return out;
}

Rng Rng::fork(std::uint64_t index) const {
  std::mt19937_64 copy = engine_;
  const std::uint64_t base = copy();
  return Rng(base ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
}

}  // namespace exmon
