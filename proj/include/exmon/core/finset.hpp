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
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace exmon {

/// A finite set of distinct string atoms in a fixed iteration order.
///
/// Cheap to copy: the label list is shared. Two FinSets are equal iff they
/// list the same labels in the same order.
class FinSet {
 public:
  FinSet();
  explicit FinSet(std::vector<std::string> atoms);

  /// Atoms "x0".."x{n-1}".
  static FinSet numbered(std::size_t n, const std::string& prefix = "x");

  std::size_t size() const { return atoms_->size(); }
  bool empty() const { return atoms_->empty(); }
  const std::string& atom(std::size_t i) const { return (*atoms_)[i]; }
  const std::vector<std::string>& atoms() const { return *atoms_; }

  std::optional<std::size_t> find(const std::string& label) const;
  /// Index of label; throws DomainError when absent.
  std::size_t index_of(const std::string& label) const;
  bool contains(const std::string& label) const { return find(label).has_value(); }

  friend bool operator==(const FinSet& a, const FinSet& b);

 private:
  std::shared_ptr<const std::vector<std::string>> atoms_;
};

/// Throws DomainError unless a == b; `what` names the operation.
void require_same_domain(const FinSet& a, const FinSet& b, const char* what);

}  // namespace exmon
