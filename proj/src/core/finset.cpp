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

#include "exmon/core/finset.hpp"

#include <algorithm>
#include <unordered_set>

#include "exmon/core/error.hpp"

namespace exmon {

FinSet::FinSet() : atoms_(std::make_shared<const std::vector<std::string>>()) {}

FinSet::FinSet(std::vector<std::string> atoms) {
  std::unordered_set<std::string> seen;
  for (const auto& a : atoms) {
    if (!seen.insert(a).second) throw DomainError("duplicate atom '" + a + "'");
  }
  atoms_ = std::make_shared<const std::vector<std::string>>(std::move(atoms));
}

FinSet FinSet::numbered(std::size_t n, const std::string& prefix) {
  std::vector<std::string> atoms;
  atoms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) atoms.push_back(prefix + std::to_string(i));
  return FinSet(std::move(atoms));
}

std::optional<std::size_t> FinSet::find(const std::string& label) const {
  const auto it = std::find(atoms_->begin(), atoms_->end(), label);
  if (it == atoms_->end()) return std::nullopt;
  return static_cast<std::size_t>(it - atoms_->begin());
}

std::size_t FinSet::index_of(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw DomainError("atom '" + label + "' not in domain");
}

bool operator==(const FinSet& a, const FinSet& b) {
  return a.atoms_ == b.atoms_ || *a.atoms_ == *b.atoms_;
}

void require_same_domain(const FinSet& a, const FinSet& b, const char* what) {
  if (!(a == b)) throw DomainError(std::string(what) + ": domain mismatch");
}

}  // namespace exmon
