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

#include "exmon/quantum/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "exmon/core/error.hpp"

namespace exmon::quantum {

namespace {

void require_dim(std::size_t dim) {
  if (dim < kMinDim || dim > kMaxDim) throw DomainError("matrix dimension " + std::to_string(dim) + " outside 2..4");
}

void require_same(const CMatrix& a, const CMatrix& b) {
  if (a.dim() != b.dim()) throw DomainError("matrix dimensions differ");
}

double off_diagonal(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return s;
}

}  // namespace

CMatrix::CMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) { require_dim(dim); }

CMatrix::CMatrix(std::size_t dim, std::vector<Complex> entries) : dim_(dim), entries_(std::move(entries)) {
  require_dim(dim);
  if (entries_.size() != dim * dim) throw DomainError("matrix needs " + std::to_string(dim * dim) + " entries");
  for (const auto& z : entries_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw DomainError("matrix entry is not finite");
  }
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::unit(std::size_t dim, std::size_t k, std::size_t l) {
  CMatrix m(dim);
  m(k, l) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(const std::vector<double>& values) {
  CMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = std::conj((*this)(j, i));
  }
  return m;
}

Complex CMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

CMatrix CMatrix::hermitian_part() const { return 0.5 * (*this + adjoint()); }

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  require_same(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  require_same(a, b);
  CMatrix m(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) += a(i, k) * b(k, j);
    }
  }
  return m;
}

CMatrix operator*(Complex s, CMatrix a) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) a(i, j) *= s;
  }
  return a;
}

double max_norm(const CMatrix& a) {
  double m = 0.0;
  for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

double hermiticity_defect(const CMatrix& a) { return max_norm(a - a.adjoint()); }

EigenDecomposition eigh(const CMatrix& input) {
  const std::size_t d = input.dim();
  CMatrix a = input.hermitian_part();
  CMatrix v = CMatrix::identity(d);
  const double scale = std::max(max_norm(a), 1e-300);
  constexpr int kMaxSweeps = 64;
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal(a) <= 1e-30 * scale * scale) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < d; ++p) {
      for (std::size_t q = p + 1; q < d; ++q) {
        const Complex g = a(p, q);
        const double mag = std::abs(g);
        if (mag <= 1e-300) continue;
        // Phase e makes the (p,q) entry real; then a real rotation zeroes it.
        const Complex e = g / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        CMatrix u = CMatrix::identity(d);
        u(p, p) = c;
        u(p, q) = s;
        u(q, p) = -std::conj(e) * s;
        u(q, q) = std::conj(e) * c;
        a = u.adjoint() * a * u;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        v = v * u;
      }
    }
  }
  if (!converged && off_diagonal(a) > 1e-24 * scale * scale) throw Error("Jacobi eigen-decomposition did not converge");
  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });
  EigenDecomposition out{std::vector<double>(d), CMatrix(d)};
  for (std::size_t c = 0; c < d; ++c) {
    out.values[c] = a(order[c], order[c]).real();
    for (std::size_t r = 0; r < d; ++r) out.vectors(r, c) = v(r, order[c]);
  }
  return out;
}

nlohmann::json to_json(const CMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

CMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw FormatError("matrix must be an array of rows");
  const std::size_t d = j.size();
  if (d < kMinDim || d > kMaxDim) throw FormatError("matrix dimension must be 2..4");
  std::vector<Complex> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != d) throw FormatError("matrix rows must have length " + std::to_string(d));
    for (const auto& z : row) {
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw FormatError("matrix entries must be [re, im] pairs");
      }
      entries.emplace_back(z[0].get<double>(), z[1].get<double>());
    }
  }
  try {
    return CMatrix(d, std::move(entries));
  } catch (const DomainError& e) {
    throw FormatError(e.what());
  }
}

}  // namespace exmon::quantum
