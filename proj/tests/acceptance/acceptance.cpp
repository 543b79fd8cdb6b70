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

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "exmon/core/random.hpp"
#include "exmon/effect/laws.hpp"
#include "exmon/lang/parser.hpp"
#include "exmon/lang/semantics.hpp"
#include "exmon/monads/laws.hpp"
#include "exmon/quantum/state.hpp"
#include "exmon/totalize/totalize.hpp"
#include "support/fixtures.hpp"

// One line per criterion: "PASS [n] ..." or "FAIL [n] ...". Exits nonzero
// when any criterion fails.
namespace {

using exmon::FinSet;
using exmon::LawReport;
using exmon::Rational;
using exmon::Rng;
using exmon::UnitScalar;
namespace lang = exmon::lang;
namespace monads = exmon::monads;
namespace effect = exmon::effect;

constexpr double kChainBudgetSeconds = 1.0;
constexpr double kMonadBudgetSeconds = 30.0;
constexpr double kGleasonBudgetSeconds = 60.0;
constexpr std::size_t kMonadCases = 1000;
constexpr std::size_t kMeasureCases = 500;
constexpr std::size_t kMeasureMaxAtoms = 8;
constexpr std::size_t kPlantedTables = 100;
constexpr std::size_t kIsoValues = 100;
constexpr std::size_t kBarycenterPairs = 200;
constexpr std::size_t kGeometricIterations = 20;
constexpr std::size_t kGleasonTrials = 100;
constexpr double kStateTol = 1e-8;
constexpr double kReconstructTol = 1e-8;
constexpr double kTomographyTol = 1e-6;
constexpr std::uint64_t kSeed = 20261014;

struct Verdict {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3fs", s);
  return buf;
}

std::string first_failure(const LawReport& r) {
  for (const auto& a : r.axioms) {
    if (!a.passed()) return r.subject + ": " + a.axiom;
  }
  return r.subject;
}

bool has_witness(const LawReport& r) {
  for (const auto& a : r.axioms) {
    if (!a.passed() && !a.failures.empty()) return true;
  }
  return false;
}

// --- 1 -------------------------------------------------------------------

constexpr const char* kChainSource =
    "var s : 0..2;\n"
    "if s = 0 then { s := {1: 1/2, 2: 1/2} }\n"
    "else { if s = 1 then { s := {1: 1/3, 2: 2/3} } else { s := {2: 1} } }\n";

// Transition table written out by hand, independent of the parser.
const std::vector<std::vector<Rational>>& chain_table() {
  static const std::vector<std::vector<Rational>> t = {
      {Rational(0), Rational(1, 2), Rational(1, 2)},
      {Rational(0), Rational(1, 3), Rational(2, 3)},
      {Rational(0), Rational(0), Rational(1)},
  };
  return t;
}

Rational chain_paths_to_c(std::size_t from, std::size_t steps) {
  if (steps == 0) return from == 2 ? Rational(1) : Rational(0);
  Rational total;
  for (std::size_t next = 0; next < 3; ++next) {
    const Rational& p = chain_table()[from][next];
    if (p != Rational(0)) total += p * chain_paths_to_c(next, steps - 1);
  }
  return total;
}

Verdict criterion_chain() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const lang::Program one = lang::parse(kChainSource).program;
  lang::Program two = one;
  two.body = lang::seq(one.body, one.body);
  const lang::QueryPredicate at_c = lang::parse_query("[s = 2]", one.decls);
  const lang::WpResult a1 = lang::wp(one, at_c, {0});
  const lang::WpResult b1 = lang::wp(one, at_c, {1});
  const lang::WpResult a2 = lang::wp(two, at_c, {0});
  v.require(a1.lo == Rational(1, 2) && a1.hi == Rational(1, 2), "one step from a: " + a1.lo.to_string());
  v.require(b1.lo == Rational(2, 3) && b1.hi == Rational(2, 3), "one step from b: " + b1.lo.to_string());
  v.require(a2.lo == Rational(5, 6) && a2.hi == Rational(5, 6), "two steps from a: " + a2.lo.to_string());
  v.require(chain_paths_to_c(0, 2) == a2.lo, "path enumeration disagrees: " + chain_paths_to_c(0, 2).to_string());
  for (std::int64_t s = 0; s < 3; ++s) {
    const auto from = static_cast<std::size_t>(s);
    v.require(lang::wp(one, at_c, {s}).lo == chain_paths_to_c(from, 1), "one-step path mismatch");
    v.require(lang::wp(two, at_c, {s}).lo == chain_paths_to_c(from, 2), "two-step path mismatch");
  }
  const double t = seconds_since(start);
  v.require(t < kChainBudgetSeconds, "runtime " + fmt_seconds(t));
  if (v.ok) v.detail = "1/2, 2/3, 5/6 in " + fmt_seconds(t);
  return v;
}

// --- 2 -------------------------------------------------------------------

Verdict criterion_monad_laws() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const LawReport real = monads::check_monad_laws(kSeed, kMonadCases);
  v.require(real.passed(), "real maps fail " + first_failure(real));
  const std::vector<std::pair<std::string, monads::MonadLawHooks>> mutants = {
      {"squared sigma", monads::mutants::squared_sigma()},
      {"transposed compose", monads::mutants::transposed_compose()},
      {"unweighted mu", monads::mutants::unweighted_mu()},
  };
  for (const auto& [name, hooks] : mutants) {
    const LawReport r = monads::check_monad_laws(kSeed, kMonadCases, hooks);
    v.require(!r.passed(), "mutant not caught: " + name);
    v.require(has_witness(r), "mutant caught without witness: " + name);
  }
  const double t = seconds_since(start);
  v.require(t < kMonadBudgetSeconds, "runtime " + fmt_seconds(t));
  if (v.ok) v.detail = std::to_string(kMonadCases) + " cases, 3 mutants caught, " + fmt_seconds(t);
  return v;
}

// --- 3 -------------------------------------------------------------------

monads::Expectation random_expectation(Rng& rng, std::size_t max_atoms) {
  const std::size_t n = 1 + rng.below(max_atoms);
  return monads::Expectation(FinSet::numbered(n), rng.sparse_simplex(n));
}

Verdict criterion_measures() {
  Verdict v;
  const LawReport r = monads::check_measure_bijection(kSeed, kMeasureCases, kMeasureMaxAtoms);
  v.require(r.passed(), first_failure(r));
  const auto* round = r.find("phi_inverse(phi(h)) = h");
  v.require(round != nullptr && round->cases == kMeasureCases, "round trip case count");

  // Planted tables built here, outside the harness.
  Rng rng(kSeed ^ 0x5eed);
  std::size_t rejected = 0;
  for (std::size_t i = 0; i < kPlantedTables; ++i) {
    Rng local = rng.fork(i);
    const std::size_t n = 2 + local.below(kMeasureMaxAtoms - 1);
    const monads::Expectation h(FinSet::numbered(n), local.sparse_simplex(n));
    const monads::MeasureTable m = monads::phi(h);
    for (std::uint64_t mask = 0; mask <= m.full_mask(); ++mask) {
      Rational sum;
      for (std::size_t a = 0; a < n; ++a) {
        if ((mask >> a) & 1U) sum += h.weight(a);
      }
      v.require(m[mask].value() == sum, "phi disagrees with subset sums");
    }
    const std::uint64_t target = 1 + local.below(m.full_mask() - 1);
    std::vector<UnitScalar> table = m.table();
    const Rational shift(static_cast<long long>(1 + local.below(8)), 16);
    table[target] = table[target].value() >= Rational(1, 2) ? table[target].value() - shift
                                                             : table[target].value() + shift;
    const monads::MeasureTable planted(h.domain(), table);
    try {
      monads::phi_inverse(planted);
    } catch (const monads::NotAdditiveError& e) {
      const auto& w = e.witness();
      const bool disjoint = (w.first & w.second) == 0 && w.first != 0 && w.second != 0;
      const bool violates = planted[w.first | w.second].value() != planted[w.first].value() + planted[w.second].value();
      if (w.kind == monads::AdditivityWitness::Kind::NotAdditive && disjoint && violates) ++rejected;
    }
  }
  v.require(rejected == kPlantedTables,
            std::to_string(rejected) + "/" + std::to_string(kPlantedTables) + " planted tables rejected");
  if (v.ok) {
    v.detail = std::to_string(kMeasureCases) + " round trips, " + std::to_string(rejected) +
               " planted tables rejected with witnesses";
  }
  return v;
}

// --- 4 -------------------------------------------------------------------

Verdict criterion_small_expectations() {
  Verdict v;
  Rng rng(kSeed + 4);
  const FinSet two({"0", "1"});
  for (std::size_t i = 0; i < kIsoValues; ++i) {
    const UnitScalar r(rng.unit_rational(1000));
    v.require(monads::exp2_iso(monads::exp2_iso_inverse(r, two)) == r, "iso(iso^-1(r)) != r at " + r.to_string());
    const Rational w = rng.unit_rational(1000);
    const monads::Expectation h(two, {w, Rational(1) - w});
    v.require(monads::exp2_iso_inverse(monads::exp2_iso(h), two) == h, "iso^-1(iso(h)) != h");
  }

  const FinSet one({"*"});
  v.require(monads::Expectation(one, {Rational(1)}) == monads::exp_unit(0, one), "unit weight rejected");
  std::size_t rejected = 0;
  for (std::size_t i = 0; i < kIsoValues; ++i) {
    Rational w = rng.unit_rational(1000);
    if (w == Rational(1)) w = Rational(0);
    if (i % 2 == 1) w = Rational(1) + Rational(static_cast<long long>(1 + rng.below(1000)), 1000);
    try {
      monads::Expectation(one, {w});
    } catch (const exmon::DomainError&) {
      ++rejected;
    }
  }
  v.require(rejected == kIsoValues, std::to_string(rejected) + " of " + std::to_string(kIsoValues) + " bad masses rejected");

  // Any expectation pushed along X -> 1 is the unit.
  const monads::KleisliMap to_one_target = monads::KleisliMap::identity(one);
  for (std::size_t i = 0; i < kIsoValues; ++i) {
    const monads::Expectation h = random_expectation(rng, 6);
    const monads::KleisliMap point(one, h.domain(), {h});
    const monads::KleisliMap bang(h.domain(), one,
                                  std::vector<monads::Expectation>(h.domain().size(), monads::exp_unit(0, one)));
    v.require(monads::kleisli_compose(point, bang) == to_one_target, "pushforward to 1 is not the unit");
  }
  if (v.ok) v.detail = "E(2) round trips both ways, E(1) has exactly one element";
  return v;
}

// --- 5 -------------------------------------------------------------------

Verdict criterion_barycenter() {
  Verdict v;
  Rng rng(kSeed + 5);
  for (std::size_t i = 0; i < kBarycenterPairs; ++i) {
    const std::size_t k = 1 + rng.below(6);
    const std::vector<Rational> weights = rng.simplex(k);
    monads::Convex<UnitScalar> phi;
    for (std::size_t j = 0; j < k; ++j) phi.terms.emplace_back(weights[j], UnitScalar(rng.unit_rational()));
    phi.validate();
    const Rational b = rng.unit_rational();
    const Rational c = rng.unit_rational();
    const monads::AffineMap q = monads::AffineMap::make(c - b, b);
    Rational expected;
    for (const auto& [r, x] : phi.terms) expected += r * ((c - b) * x.value() + b);
    v.require(q(monads::barycenter(phi)).value() == expected, "pair " + std::to_string(i));
  }
  if (v.ok) v.detail = std::to_string(kBarycenterPairs) + " pairs exact";
  return v;
}

// --- 6 -------------------------------------------------------------------

Verdict criterion_totalization() {
  Verdict v;
  namespace cat = effect::catalog;
  std::vector<effect::EffectAlgebraInstance> instances = {cat::two_element()};
  for (std::uint64_t n = 1; n <= 5; ++n) instances.push_back(cat::chain(n));
  for (std::size_t k = 1; k <= 3; ++k) instances.push_back(cat::powerset(FinSet::numbered(k)));
  for (const auto& inst : instances) {
    const LawReport r = exmon::totalize::roundtrip_check(inst);
    v.require(r.passed(), first_failure(r));
    const std::uint64_t size = *inst.carrier_size;
    const auto* inj = r.find("embed injective");
    const auto* sums = r.find("x perp y iff embed(x) + embed(y) <= u, and sums agree");
    v.require(inj != nullptr && inj->cases == size, inst.name + ": not exhaustive over elements");
    v.require(sums != nullptr && sums->cases == size * size, inst.name + ": not exhaustive over pairs");
  }
  for (int n = 1; n <= 4; ++n) {
    v.require(exmon::testing::congruence_matches_totals(n, 6), "congruence oracle disagrees at Chain(" + std::to_string(n) + ")");
  }
  if (v.ok) v.detail = std::to_string(instances.size()) + " instances exhaustive, oracle agrees for Chain(1..4)";
  return v;
}

// --- 7 -------------------------------------------------------------------

Verdict criterion_geometric() {
  Verdict v;
  const lang::Program p = lang::parse("var c : 0..1; while c = 1 do { c := {0: 1/2, 1: 1/2} }").program;
  std::vector<Rational> residuals;
  lang::LoopOptions opts;
  opts.max_iter = kGeometricIterations;
  opts.on_iteration = [&](std::size_t, const lang::Transformer& w) { residuals.push_back(w.at(1).residual()); };
  lang::denote(p, opts);
  v.require(residuals.size() == kGeometricIterations, std::to_string(residuals.size()) + " iterations observed");
  Rational expected(1);
  for (std::size_t n = 1; n <= residuals.size(); ++n) {
    expected = expected * Rational(1, 2);
    v.require(residuals[n - 1] == expected, "residual after " + std::to_string(n) + " is " + residuals[n - 1].to_string());
  }

  const std::vector<std::string> args = {"exmon", "run", EXMON_PROGRAMS_DIR "/geom.el", "--query", "1", "--init",
                                         "c=1", "--max-iter", std::to_string(kGeometricIterations), "--json"};
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = exmon::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  const std::string want = R"({"lo":"1048575/1048576","hi":"1/1","iterations":20,"residual":"1/1048576"})"
                           "\n";
  v.require(code == 0, "cli exit " + std::to_string(code) + ": " + err.str());
  v.require(out.str() == want, "cli printed " + out.str());
  if (v.ok) v.detail = "2^-n for n = 1..20, lo = 1048575/1048576 byte-exact";
  return v;
}

// --- 8 -------------------------------------------------------------------

Verdict criterion_gleason() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const exmon::quantum::GleasonTolerances tols{kStateTol, kReconstructTol, kTomographyTol};
  for (std::size_t d = 2; d <= 4; ++d) {
    const LawReport r = exmon::quantum::gleason_suite(d, kGleasonTrials, kSeed + d, tols);
    v.require(r.passed(), first_failure(r));
  }
  const double t = seconds_since(start);
  v.require(t < kGleasonBudgetSeconds, "runtime " + fmt_seconds(t));
  if (v.ok) v.detail = "dims 2..4, " + std::to_string(kGleasonTrials) + " trials each, " + fmt_seconds(t);
  return v;
}

// --- 9 -------------------------------------------------------------------

Verdict criterion_effect_laws() {
  Verdict v;
  namespace cat = effect::catalog;
  const FinSet ab({"a", "b"});
  const FinSet abc({"a", "b", "c"});
  std::size_t passed = 0;
  for (const auto& inst : {cat::two_element(), cat::unit_interval(), cat::chain(1), cat::chain(3), cat::chain(5),
                           cat::powerset(abc), cat::predicates(ab), cat::product({cat::two_element(), cat::chain(2)})}) {
    const LawReport r = effect::check_effect_algebra(inst, kSeed, kMonadCases);
    v.require(r.passed(), first_failure(r));
    passed += r.passed();
  }
  for (const auto& mod : {cat::unit_interval_module(), cat::predicate_module(abc)}) {
    const LawReport r = effect::check_effect_module(mod, kSeed, kMonadCases);
    v.require(r.passed(), first_failure(r));
    passed += r.passed();
  }
  const LawReport min_sum = effect::check_effect_algebra(exmon::testing::min_sum_interval(), kSeed, kMonadCases);
  v.require(!min_sum.passed() && has_witness(min_sum), "min-sum interval not caught");
  const LawReport squared = effect::check_effect_module(exmon::testing::squared_action_interval_module(), kSeed, kMonadCases);
  v.require(!squared.passed() && has_witness(squared), "squared action not caught");
  if (v.ok) v.detail = std::to_string(passed) + " catalog instances pass, 2 broken instances caught";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"chain wp values", criterion_chain},
      {"monad laws and mutants", criterion_monad_laws},
      {"measure bijection", criterion_measures},
      {"E(2) and E(1)", criterion_small_expectations},
      {"barycenter property", criterion_barycenter},
      {"totalization round trip", criterion_totalization},
      {"geometric loop", criterion_geometric},
      {"trace states and density matrices", criterion_gleason},
      {"effect algebra laws", criterion_effect_laws},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.ok = false;
      v.detail = std::string("threw: ") + e.what();
    }
    std::printf("%s [%zu] %s: %s\n", v.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), v.detail.c_str());
    failed += v.ok ? 0 : 1;
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
