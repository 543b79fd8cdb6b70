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

#include <complex>
#include <cstddef>
#include <vector>

#include <json.hpp>

namespace exmon::quantum {

using Complex = std::complex<double>;

inline constexpr std::size_t kMinDim = 2;
inline constexpr std::size_t kMaxDim = 4;

/// Square complex matrix of dimension 2..4 with finite entries.
class CMatrix {
 public:
  /// The zero matrix; throws DomainError outside 2..4.
  explicit CMatrix(std::size_t dim);
  /// Row-major entries; throws DomainError on a size mismatch or a
  /// non-finite entry.
  CMatrix(std::size_t dim, std::vector<Complex> entries);

  static CMatrix identity(std::size_t dim);
  /// The matrix unit |k><l|.
  static CMatrix unit(std::size_t dim, std::size_t k, std::size_t l);
  static CMatrix diagonal(const std::vector<double>& values);

  std::size_t dim() const { return dim_; }
  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  const std::vector<Complex>& entries() const { return entries_; }

  CMatrix adjoint() const;
  Complex trace() const;
  /// (A + A^dagger) / 2
  CMatrix hermitian_part() const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
  friend CMatrix operator*(Complex s, CMatrix a);
  friend CMatrix operator*(double s, const CMatrix& a) { return Complex(s, 0.0) * a; }

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// max_ij |a_ij|
double max_norm(const CMatrix& a);
/// max_ij |a_ij - conj(a_ji)|
double hermiticity_defect(const CMatrix& a);

/// Hermitian eigen-decomposition A = V diag(values) V^dagger, values sorted
/// descending and V unitary with eigenvectors as columns.
struct EigenDecomposition {
  std::vector<double> values;
  CMatrix vectors;
};

/// Cyclic Jacobi on the Hermitian part of `a`. Throws Error if the sweeps
/// fail to converge.
EigenDecomposition eigh(const CMatrix& a);

/// Row-major rows of [re, im] pairs.
nlohmann::json to_json(const CMatrix& m);
/// Throws FormatError on a malformed or non-square table.
CMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace exmon::quantum
