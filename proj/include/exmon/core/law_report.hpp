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
#include <deque>
#include <string>
#include <vector>

#include <json.hpp>

namespace exmon {

/// One counterexample: the inputs that broke an axiom, the value the axiom
/// demands, and what the instance produced.
struct LawFailure {
  std::vector<std::string> inputs;
  std::string expected;
  std::string got;
};

/// Outcome of checking a single axiom over `cases` inputs.
struct AxiomResult {
  std::string axiom;
  std::size_t cases = 0;
  std::size_t failed = 0;
  std::vector<LawFailure> failures;  // witnesses, at most kMaxWitnesses kept

  static constexpr std::size_t kMaxWitnesses = 5;

  bool passed() const { return failed == 0; }
  void record_case() { ++cases; }
  void record_failure(LawFailure f);
  /// Adds another result's cases, failures and witnesses (up to the cap).
  void absorb(const AxiomResult& other);
};

/// A named collection of axiom results, e.g. "effect-algebra: Chain(3)".
struct LawReport {
  std::string subject;
  std::deque<AxiomResult> axioms;  // deque: axiom() references stay valid

  bool passed() const;
  /// Returns the result named `axiom`, creating it on first use.
  AxiomResult& axiom(const std::string& name);
  const AxiomResult* find(const std::string& name) const;
  /// Appends all axioms of `other`, prefixing their names with other.subject.
  void merge(const LawReport& other);
};

/// {axiom, cases, failures:[{inputs, expected, got}]} per axiom.
nlohmann::ordered_json to_json(const AxiomResult& r);
nlohmann::ordered_json to_json(const LawReport& r);

}  // namespace exmon
