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

#include "exmon/quantum/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

namespace exmon::quantum {

namespace {

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(3);
  ss << std::scientific << v;
  return ss.str();
}

void require_tol(double tol) {
  if (!(tol >= 0.0) || !std::isfinite(tol)) throw DomainError("tolerance must be a nonnegative real");
}

[[noreturn]] void violation(const char* kind, const std::vector<std::string>& problems) {
  std::string msg = std::string("not a valid ") + kind + ":";
  for (std::size_t i = 0; i < problems.size(); ++i) msg += (i ? "; " : " ") + problems[i];
  throw InvariantError(msg);
}

}  // namespace

Density::Density(const CMatrix& m, double tol) : m_(m), tol_(tol) {
  require_tol(tol);
  std::vector<std::string> problems;
  if (const double h = hermiticity_defect(m); h > tol) problems.push_back("hermiticity defect " + fmt(h));
  const double lowest = eigh(m).values.back();
  if (lowest < -tol) problems.push_back("eigenvalue " + fmt(lowest) + " below 0");
  const Complex tr = m.trace();
  if (const double dev = std::abs(tr - Complex(1.0, 0.0)); dev > tol) problems.push_back("trace off by " + fmt(dev));
  if (!problems.empty()) violation("density", problems);
}

Density Density::maximally_mixed(std::size_t dim) { return Density((1.0 / static_cast<double>(dim)) * CMatrix::identity(dim)); }

Effect::Effect(const CMatrix& m, double tol) : m_(m.hermitian_part()), tol_(tol) {
  require_tol(tol);
  std::vector<std::string> problems;
  if (const double h = hermiticity_defect(m); h > tol) problems.push_back("hermiticity defect " + fmt(h));
  const auto values = eigh(m_).values;
  if (values.back() < -tol) problems.push_back("eigenvalue " + fmt(values.back()) + " below 0");
  if (values.front() > 1.0 + tol) problems.push_back("eigenvalue 1 + " + fmt(values.front() - 1.0) + " above 1");
  if (!problems.empty()) violation("effect", problems);
}

Effect Effect::complement() const { return Effect(CMatrix::identity(dim()) - m_, tol_); }

Effect Effect::scale(double r) const {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("effect scalar must lie in [0,1]");
  return Effect(r * m_, tol_);
}

Projection::Projection(const CMatrix& m, double tol) : m_(m), tol_(tol) {
  require_tol(tol);
  std::vector<std::string> problems;
  if (const double h = hermiticity_defect(m); h > tol) problems.push_back("hermiticity defect " + fmt(h));
  if (const double e = max_norm(m * m - m); e > tol) problems.push_back("idempotence defect " + fmt(e));
  if (!problems.empty()) violation("projection", problems);
}

Projection Projection::coordinate(std::size_t dim, const std::vector<std::size_t>& axes) {
  CMatrix m(dim);
  for (std::size_t k : axes) {
    if (k >= dim) throw DomainError("projection axis out of range");
    m(k, k) = 1.0;
  }
  return Projection(m);
}

std::optional<Effect> effect_osum(const Effect& a, const Effect& b) {
  if (a.dim() != b.dim()) throw DomainError("effect dimensions differ");
  const double tol = std::max(a.tol(), b.tol());
  const CMatrix sum = a.matrix() + b.matrix();
  if (eigh(sum).values.front() > 1.0 + tol) return std::nullopt;
  return Effect(sum, tol);
}

FormalTensor::FormalTensor(std::vector<std::pair<double, Projection>> terms, double tol) : terms_(std::move(terms)), tol_(tol) {
  require_tol(tol);
  if (terms_.empty()) throw DomainError("formal tensor has no terms");
  for (const auto& [c, p] : terms_) {
    if (p.dim() != terms_.front().second.dim()) throw DomainError("formal tensor mixes dimensions");
    if (!(c >= -tol && c <= 1.0 + tol)) throw DomainError("formal tensor coefficient " + fmt(c) + " outside [0,1]");
  }
  if (std::abs(coefficient_sum() - 1.0) > tol) {
    throw DomainError("formal tensor coefficients sum to " + fmt(coefficient_sum()) + ", not 1");
  }
}

double FormalTensor::coefficient_sum() const {
  double s = 0.0;
  for (const auto& [c, _] : terms_) s += c;
  return s;
}

FormalTensor layer_cake(const Effect& a) {
  const double tol = a.tol();
  const std::size_t d = a.dim();
  const EigenDecomposition eig = eigh(a.matrix());

  // Blocks of eigenvalues (descending) whose neighbours lie within tol.
  struct Block {
    double value;
    std::vector<std::size_t> columns;
  };
  std::vector<Block> blocks;
  for (std::size_t i = 0; i < d; ++i) {
    const double lambda = std::clamp(eig.values[i], 0.0, 1.0);
    if (!blocks.empty() && eig.values[i - 1] - eig.values[i] <= tol) {
      auto& b = blocks.back();
      b.value = (b.value * static_cast<double>(b.columns.size()) + lambda) / static_cast<double>(b.columns.size() + 1);
      b.columns.push_back(i);
    } else {
      blocks.push_back({lambda, {i}});
    }
  }
  for (auto& b : blocks) {
    if (b.value <= tol) b.value = 0.0;
    if (b.value >= 1.0 - tol) b.value = 1.0;
  }

  std::vector<std::pair<double, Projection>> terms;
  CMatrix q(d);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t col : blocks[i].columns) {
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) q(r, c) += eig.vectors(r, col) * std::conj(eig.vectors(c, col));
      }
    }
    const double next = i + 1 < blocks.size() ? blocks[i + 1].value : 0.0;
    const double coefficient = blocks[i].value - next;
    if (coefficient > 0.0) terms.emplace_back(coefficient, Projection(q, 10.0 * tol));
  }
  const double top = blocks.front().value;
  if (1.0 - top > 0.0) terms.emplace_back(1.0 - top, Projection::zero(d));
  return FormalTensor(std::move(terms), tol);
}

Effect tensor_eval(const FormalTensor& t) {
  CMatrix sum(t.dim());
  for (const auto& [c, p] : t.terms()) sum += c * p.matrix();
  return Effect(sum, 10.0 * t.tol());
}

}  // namespace exmon::quantum
