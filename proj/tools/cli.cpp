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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "exmon/effect/laws.hpp"
#include "exmon/lang/parser.hpp"
#include "exmon/lang/semantics.hpp"
#include "exmon/monads/laws.hpp"
#include "exmon/monads/measure.hpp"
#include "exmon/quantum/state.hpp"
#include "exmon/totalize/totalize.hpp"

namespace exmon::cli {

namespace {

/// Input error reported with exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::ordered_json read_json(const std::string& path) {
  try {
    return nlohmann::ordered_json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + out_path);
  f << text << '\n';
}

struct RunArgs {
  std::string file;
  std::string query;
  std::string init;
  std::size_t max_iter = 100;
  std::string tol = "0";
};

int do_run(const RunArgs& a, std::ostream& out, std::ostream& err) {
  lang::ParsedFile parsed;
  try {
    parsed = lang::parse(read_file(a.file));
  } catch (const lang::ParseError& e) {
    err << a.file << ":" << e.what() << '\n';
    return kExitUsage;
  }
  const auto& decls = parsed.program.decls;
  std::vector<lang::QueryPredicate> queries;
  lang::Valuation init;
  lang::LoopOptions opts;
  try {
    if (!a.query.empty()) {
      queries.push_back(lang::parse_query(a.query, decls));
    } else {
      queries = parsed.queries;
    }
    init = lang::parse_valuation(a.init, decls);
  } catch (const lang::ParseError& e) {
    err << "argument " << e.what() << '\n';
    return kExitUsage;
  }
  if (queries.empty()) {
    err << "no query: pass --query or add a query clause to " << a.file << '\n';
    return kExitUsage;
  }
  try {
    opts.tol = Rational::parse(a.tol);
  } catch (const FormatError& e) {
    err << "--tol: " << e.what() << '\n';
    return kExitUsage;
  }
  opts.max_iter = a.max_iter;
  const lang::Denotation d = lang::denote(parsed.program, opts);
  const lang::InitialDistribution start{{d.transformer.space().index(init), Rational(1)}};
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const auto& q : queries) results.push_back(lang::to_json(lang::wp(d, q, start)));
  out << (results.size() == 1 ? results[0] : results).dump() << '\n';
  return kExitOk;
}

int report_laws(const std::vector<LawReport>& reports, nlohmann::ordered_json header, bool json, std::ostream& out) {
  bool passed = true;
  for (const auto& r : reports) passed = passed && r.passed();
  if (json) {
    header["passed"] = passed;
    header["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) header["reports"].push_back(to_json(r));
    out << header.dump(2) << '\n';
  } else {
    for (const auto& r : reports) {
      std::size_t cases = 0;
      for (const auto& ax : r.axioms) cases += ax.cases;
      out << (r.passed() ? "PASS " : "FAIL ") << r.subject << " (" << r.axioms.size() << " axioms, " << cases << " cases)\n";
      for (const auto& ax : r.axioms) {
        if (ax.passed()) continue;
        out << "  " << ax.axiom << ": " << ax.failed << " failing cases\n";
        for (const auto& f : ax.failures) {
          out << "    inputs:";
          for (const auto& i : f.inputs) out << ' ' << i;
          out << "\n    expected: " << f.expected << "\n    got: " << f.got << '\n';
        }
      }
    }
  }
  return passed ? kExitOk : kExitLawFailure;
}

int do_measures(const std::string& mode, const std::string& file, const std::string& out_path, std::ostream& out,
                std::ostream& err) {
  const nlohmann::ordered_json input = read_json(file);
  try {
    if (mode == "phi") {
      emit(monads::to_json(monads::phi(monads::expectation_from_json(input))).dump(2), out_path, out);
    } else {
      emit(monads::to_json(monads::phi_inverse(monads::measure_from_json(input))).dump(2), out_path, out);
    }
  } catch (const monads::NotAdditiveError& e) {
    err << file << ": " << e.what() << '\n';
    return kExitLawFailure;
  } catch (const FormatError& e) {
    err << file << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << file << ": " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

std::vector<LawReport> check_suites(std::uint64_t seed, std::size_t cases) {
  namespace cat = effect::catalog;
  std::vector<LawReport> out;
  const FinSet ab({"a", "b"});
  const FinSet abc({"a", "b", "c"});
  for (const auto& inst : {cat::two_element(), cat::unit_interval(), cat::chain(3), cat::chain(5), cat::powerset(abc),
                           cat::predicates(ab), cat::product({cat::two_element(), cat::chain(2)})}) {
    out.push_back(effect::check_effect_algebra(inst, seed, cases));
  }
  for (const auto& mod : {cat::unit_interval_module(), cat::predicate_module(abc)}) {
    out.push_back(effect::check_effect_module(mod, seed, cases));
  }
  for (const auto& inst : {cat::two_element(), cat::chain(1), cat::chain(2), cat::chain(3), cat::chain(4), cat::chain(5),
                           cat::powerset(FinSet({"a"})), cat::powerset(ab), cat::powerset(abc), cat::unit_interval()}) {
    out.push_back(totalize::roundtrip_check(inst, seed, cases));
  }
  for (const auto& m : {totalize::monoids::nat_with_unit(3), totalize::monoids::nonneg_rationals(), totalize::monoids::nat_tuple(ab)}) {
    out.push_back(totalize::check_barred_monoid(m, seed, cases));
    out.push_back(totalize::cancellation_check(m, seed, cases));
  }
  out.push_back(monads::check_monad_laws(seed, cases));
  out.push_back(monads::check_measure_bijection(seed, cases));
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact expectation-monad toolkit: law suites, ExpLang programs, Gleason checks.", "exmon"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable output");

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "Weakest-precondition interval of a query after an ExpLang program");
  run_cmd->add_option("file", run_args.file, "Program source")->required();
  run_cmd->add_option("--query", run_args.query, "Query predicate, e.g. 's=2' or '1/2*[n=0] + 1/4'");
  run_cmd->add_option("--init", run_args.init, "Initial state, e.g. 'n=0,c=1'")->required();
  run_cmd->add_option("--max-iter", run_args.max_iter, "Maximum body unrollings per loop")->check(CLI::PositiveNumber);
  run_cmd->add_option("--tol", run_args.tol, "Residual at which loops stop, a rational in [0,1)");
  run_cmd->add_flag("--json", json, "Machine-readable output");

  std::uint64_t seed = 42;
  std::size_t cases = 1000;
  auto* check_cmd = app.add_subcommand("check", "Effect, totalization and monad law suites");
  check_cmd->add_option("--seed", seed, "Random seed");
  check_cmd->add_option("--cases", cases, "Sampled cases per axiom")->check(CLI::PositiveNumber);
  check_cmd->add_flag("--json", json, "Machine-readable output");

  std::size_t dim = 3;
  std::size_t trials = 100;
  std::uint64_t gleason_seed = 0;
  auto* gleason_cmd = app.add_subcommand("gleason", "Trace-state, layer-cake and tomography checks; prints a JSON law report");
  gleason_cmd->add_option("--dim", dim, "Hilbert space dimension")->required()->check(CLI::Range(2, 4));
  gleason_cmd->add_option("--trials", trials, "Random trials")->required()->check(CLI::PositiveNumber);
  gleason_cmd->add_option("--seed", gleason_seed, "Random seed");
  gleason_cmd->add_flag("--json", json, "Accepted for uniformity; output is always JSON");

  std::string mode;
  std::string measure_file;
  std::string out_path;
  auto* measures_cmd = app.add_subcommand("measures", "Convert between expectations and finitely additive measure tables");
  measures_cmd->add_option("mode", mode, "phi | phi-inverse")->required()->check(CLI::IsMember({"phi", "phi-inverse"}));
  measures_cmd->add_option("file", measure_file, "Input JSON")->required();
  measures_cmd->add_option("--out", out_path, "Write the result here instead of stdout");
  measures_cmd->add_flag("--json", json, "Accepted for uniformity; output is always JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*run_cmd) return do_run(run_args, out, err);
    if (*check_cmd) {
      return report_laws(check_suites(seed, cases), {{"seed", seed}, {"cases", cases}}, json, out);
    }
    if (*gleason_cmd) {
      const LawReport report = quantum::gleason_suite(dim, trials, gleason_seed);
      out << to_json(report).dump(2) << '\n';
      return report.passed() ? kExitOk : kExitLawFailure;
    }
    if (*measures_cmd) return do_measures(mode, measure_file, out_path, out, err);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const lang::RuntimeError& e) {
    err << "runtime error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace exmon::cli
