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

#include <cstdint>
#include <random>
#include <vector>

#include "exmon/core/rational.hpp"

namespace exmon {

/// Seeded generator for law-check sampling.
///
/// Only raw std::mt19937_64 output is consumed (its sequence is fixed by the
/// standard), so a seed yields the same stream on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }
  /// Uniform double in [0, 1).
  double uniform();
  /// Standard normal via Box-Muller.
  double normal();

  /// k/den with den uniform in [1, max_den] and k uniform in [0, den].
  Rational unit_rational(std::uint64_t max_den = 12);
  /// n strictly positive rationals summing to exactly 1.
  std::vector<Rational> simplex(std::size_t n, std::uint64_t max_part = 9);
  /// n nonnegative rationals summing to exactly 1; zeros appear with
  /// probability about 1/4 per entry, but never all of them.
  std::vector<Rational> sparse_simplex(std::size_t n, std::uint64_t max_part = 9);

  /// Derives an independent stream for case `index`.
  Rng fork(std::uint64_t index) const;

 private:
  std::mt19937_64 engine_;
};

}  // namespace exmon
