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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "exmon/core/law_report.hpp"
#include "exmon/core/random.hpp"
#include "exmon/quantum/operators.hpp"

namespace exmon::quantum {

/// One member of the informationally complete family used for tomography.
struct StandardEffect {
  std::string name;
  Effect effect;
};

/// The d^2 effects, in this order:
///   E{k}{k}  = |k><k|                          for each k
///   X{k}{l}  = (I + |k><l| + |l><k|) / 2       for k < l
///   Y{k}{l}  = (I - i|k><l| + i|l><k|) / 2     for k < l
/// For a density M: tr(M X_kl) = 1/2 + Re M_kl, tr(M Y_kl) = 1/2 - Im M_kl.
std::vector<StandardEffect> standard_effects(std::size_t dim);

/// A map from effects to reals: backed by a density (A -> Re tr(MA)), by a
/// table over the standard effects, or by an arbitrary function.
class StateFunctional {
 public:
  /// Table keys are standard-effect names; values must lie in [-tol, 1+tol].
  static StateFunctional of_table(std::size_t dim, std::map<std::string, double> table, double tol = kDefaultTol);
  static StateFunctional of_function(std::size_t dim, std::function<double(const CMatrix&)> f);

  std::size_t dim() const { return dim_; }
  /// Throws DomainError on a dimension mismatch, or, for a table, when the
  /// effect is not a tabulated standard effect.
  double operator()(const Effect& a) const;
  const std::optional<Density>& density() const { return density_; }
  const std::optional<std::map<std::string, double>>& table() const { return table_; }

 private:
  friend StateFunctional state_of_density(const Density& m);
  StateFunctional() = default;
  std::size_t dim_ = 0;
  std::function<double(const CMatrix&)> f_;
  std::optional<Density> density_;
  std::optional<std::map<std::string, double>> table_;
  double tol_ = kDefaultTol;
};

StateFunctional state_of_density(const Density& m);

/// The values of `s` on every standard effect.
std::map<std::string, double> tabulate(const StateFunctional& s);

/// Tomographic reconstruction from the standard-effect values. Throws
/// DomainError on an incomplete table and InvariantError when the result
/// is not a density within tol.
Density density_from_state(const StateFunctional& s, double tol = kDefaultTol);

/// Haar-like unitary from Gram-Schmidt on complex Gaussian columns.
CMatrix random_unitary(std::size_t dim, Rng& rng);
/// G G^dagger / tr, G complex Gaussian.
Density random_density(std::size_t dim, Rng& rng);
/// U diag(l) U^dagger with l uniform in [0,1].
Effect random_effect(std::size_t dim, Rng& rng);

/// For random orthogonal pairs P = U P_S U^dagger, Q = U P_T U^dagger with
/// disjoint coordinate sets S, T: s(P+Q) = s(P) + s(Q) within 10 tol, plus
/// s(I) = 1 and s(0) = 0. At dimension 2 this checks only the homomorphism
/// property of s, not a converse.
LawReport check_projection_state_additivity(const StateFunctional& s, std::size_t trials, std::uint64_t seed,
                                            double tol = kDefaultTol);

/// Effect-module homomorphism spot checks on random effects: additivity on
/// defined sums and homogeneity under r in [0,1], within 10 tol.
LawReport check_state_module_hom(const StateFunctional& s, std::size_t trials, std::uint64_t seed, double tol = kDefaultTol);

/// Per trial at dimension `dim`: a random density's trace state passes the
/// projection and effect checks, a random effect's layer cake is convex and
/// reconstructs it within `reconstruct_tol`, and the density is recovered
/// from its standard-effect table within `tomography_tol`.
struct GleasonTolerances {
  double state = 1e-8;
  double reconstruct = 1e-8;
  double tomography = 1e-6;
};
LawReport gleason_suite(std::size_t dim, std::size_t trials, std::uint64_t seed, const GleasonTolerances& tols = {});

}  // namespace exmon::quantum
