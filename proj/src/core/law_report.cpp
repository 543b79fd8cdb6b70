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

#include "exmon/core/law_report.hpp"

#include <algorithm>

namespace exmon {

void AxiomResult::record_failure(LawFailure f) {
  ++failed;
  if (failures.size() < kMaxWitnesses) failures.push_back(std::move(f));
}

void AxiomResult::absorb(const AxiomResult& other) {
  cases += other.cases;
  failed += other.failed;
  for (const auto& f : other.failures) {
    if (failures.size() < kMaxWitnesses) failures.push_back(f);
  }
}

bool LawReport::passed() const {
  return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& a) { return a.passed(); });
}

AxiomResult& LawReport::axiom(const std::string& name) {
  for (auto& a : axioms) {
    if (a.axiom == name) return a;
  }
  axioms.push_back(AxiomResult{name, 0, 0, {}});
  return axioms.back();
}

const AxiomResult* LawReport::find(const std::string& name) const {
  for (const auto& a : axioms) {
    if (a.axiom == name) return &a;
  }
  return nullptr;
}

void LawReport::merge(const LawReport& other) {
  for (const auto& a : other.axioms) {
    AxiomResult copy = a;
    if (!other.subject.empty()) copy.axiom = other.subject + ": " + a.axiom;
    axioms.push_back(std::move(copy));
  }
}

nlohmann::ordered_json to_json(const AxiomResult& r) {
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
  }
  return {{"axiom", r.axiom}, {"cases", r.cases}, {"failed", r.failed}, {"failures", failures}};
}

nlohmann::ordered_json to_json(const LawReport& r) {
  nlohmann::ordered_json axioms = nlohmann::ordered_json::array();
  for (const auto& a : r.axioms) axioms.push_back(to_json(a));
  return {{"subject", r.subject}, {"passed", r.passed()}, {"axioms", axioms}};
}

}  // namespace exmon
