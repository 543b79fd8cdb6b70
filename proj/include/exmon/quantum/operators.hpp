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
#include <optional>
#include <utility>
#include <vector>

#include "exmon/core/error.hpp"
#include "exmon/quantum/matrix.hpp"

namespace exmon::quantum {

inline constexpr double kDefaultTol = 1e-9;

/// A matrix failed the invariants of Density, Effect or Projection. The
/// message lists each violated invariant with its measured defect.
class InvariantError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Hermitian, eigenvalues >= -tol, |tr - 1| <= tol.
class Density {
 public:
  explicit Density(const CMatrix& m, double tol = kDefaultTol);
  static Density maximally_mixed(std::size_t dim);

  const CMatrix& matrix() const { return m_; }
  double tol() const { return tol_; }
  std::size_t dim() const { return m_.dim(); }

 private:
  CMatrix m_;
  double tol_;
};

/// 0 <= A <= I within tol; stored as its exact Hermitian part.
class Effect {
 public:
  explicit Effect(const CMatrix& m, double tol = kDefaultTol);
  static Effect zero(std::size_t dim) { return Effect(CMatrix(dim)); }
  static Effect identity(std::size_t dim) { return Effect(CMatrix::identity(dim)); }

  const CMatrix& matrix() const { return m_; }
  double tol() const { return tol_; }
  std::size_t dim() const { return m_.dim(); }
  /// I - A
  Effect complement() const;
  /// r.A for r in [0,1].
  Effect scale(double r) const;

 private:
  CMatrix m_;
  double tol_;
};

/// Hermitian and idempotent within tol.
class Projection {
 public:
  explicit Projection(const CMatrix& m, double tol = kDefaultTol);
  static Projection zero(std::size_t dim) { return Projection(CMatrix(dim)); }
  static Projection identity(std::size_t dim) { return Projection(CMatrix::identity(dim)); }
  /// Projection onto the listed coordinate axes.
  static Projection coordinate(std::size_t dim, const std::vector<std::size_t>& axes);

  const CMatrix& matrix() const { return m_; }
  double tol() const { return tol_; }
  std::size_t dim() const { return m_.dim(); }
  Effect as_effect() const { return Effect(m_, tol_); }

 private:
  CMatrix m_;
  double tol_;
};

/// A + B when its largest eigenvalue is <= 1 + tol; tol is the larger of
/// the operands'. Throws DomainError on a dimension mismatch.
std::optional<Effect> effect_osum(const Effect& a, const Effect& b);

/// sum c_i (x) P_i with coefficients in [0,1] summing to 1 within tol.
class FormalTensor {
 public:
  /// Throws DomainError when empty, on mixed dimensions, or when the
  /// coefficients are not convex within tol (in particular all zero).
  explicit FormalTensor(std::vector<std::pair<double, Projection>> terms, double tol = kDefaultTol);

  const std::vector<std::pair<double, Projection>>& terms() const { return terms_; }
  double tol() const { return tol_; }
  std::size_t dim() const { return terms_.front().second.dim(); }
  double coefficient_sum() const;

 private:
  std::vector<std::pair<double, Projection>> terms_;
  double tol_;
};

/// With distinct eigenvalues l_1 > ... > l_k and cumulative spectral
/// projections Q_i: (l_i - l_{i+1}, Q_i) for i < k, (l_k, Q_k) and
/// (1 - l_1, 0). Eigenvalues within tol of a neighbour share a block,
/// values within tol of 0 or 1 are snapped, and zero coefficients dropped.
FormalTensor layer_cake(const Effect& a);

/// sum c_i P_i, validated as an Effect at 10 tol.
Effect tensor_eval(const FormalTensor& t);

}  // namespace exmon::quantum
