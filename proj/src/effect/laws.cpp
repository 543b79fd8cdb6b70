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

#include "exmon/effect/laws.hpp"

#include <array>

namespace exmon::effect {

namespace {

constexpr const char* kUndefined = "undefined";

std::string show_opt(const EffectAlgebraInstance& inst, const std::optional<Element>& e) {
  return e ? inst.show(*e) : kUndefined;
}

// Largest k-tuple space we would enumerate for this instance, if any.
bool exhaustive(const EffectAlgebraInstance& inst, int arity) {
  if (!inst.enumerable()) return false;
  std::uint64_t total = 1;
  for (int i = 0; i < arity; ++i) {
    if (*inst.carrier_size != 0 && total > kExhaustiveTupleLimit / *inst.carrier_size) return false;
    total *= *inst.carrier_size;
  }
  return total <= kExhaustiveTupleLimit;
}

template <int K, class Gen, class Fn>
void for_tuples(const EffectAlgebraInstance& inst, std::size_t cases, Rng& rng, Gen&& gen, Fn&& fn) {
  if (exhaustive(inst, K)) {
    const std::uint64_t n = *inst.carrier_size;
    std::array<std::uint64_t, K> idx{};
    while (true) {
      std::array<Element, K> tuple;
      for (int i = 0; i < K; ++i) tuple[i] = inst.element_at(idx[i]);
      fn(tuple);
      int pos = 0;
      while (pos < K && ++idx[pos] == n) idx[pos++] = 0;
      if (pos == K) break;
    }
    return;
  }
  for (std::size_t c = 0; c < cases; ++c) {
    Rng case_rng = rng.fork(c);
    fn(gen(case_rng));
  }
}

}  // namespace

LawReport check_effect_algebra(const EffectAlgebraInstance& inst, std::uint64_t seed, std::size_t cases) {
  LawReport report{"effect-algebra " + inst.name, {}};
  Rng rng(seed);
  const Element zero = inst.zero();
  const Element one = inst.one();

  auto single = [&](Rng& r) { return std::array<Element, 1>{inst.sample(r)}; };
  // Half the sampled pairs are orthogonal by construction so the defined
  // branch of each axiom is exercised on continuous carriers.
  auto pair = [&](Rng& r) {
    Element x = inst.sample(r);
    Element y = r.coin() ? inst.sample_below(r, inst.ortho(x)) : inst.sample(r);
    return std::array<Element, 2>{x, y};
  };
  auto triple = [&](Rng& r) {
    Element x = inst.sample(r);
    if (r.coin()) {
      Element y = inst.sample_below(r, inst.ortho(x));
      if (auto xy = inst.osum(x, y)) {
        Element z = inst.sample_below(r, inst.ortho(*xy));
        return std::array<Element, 3>{x, y, z};
      }
      return std::array<Element, 3>{x, y, inst.sample(r)};
    }
    return std::array<Element, 3>{x, inst.sample(r), inst.sample(r)};
  };

  {
    auto& ax = report.axiom("zero-neutral: x (+) 0 = x");
    for_tuples<1>(inst, cases, rng, single, [&](const std::array<Element, 1>& t) {
      ax.record_case();
      auto s = inst.osum(t[0], zero);
      if (!s || !(*s == t[0])) ax.record_failure({{inst.show(t[0])}, inst.show(t[0]), show_opt(inst, s)});
    });
  }
  {
    auto& ax = report.axiom("commutativity: x (+) y = y (+) x");
    for_tuples<2>(inst, cases, rng, pair, [&](const std::array<Element, 2>& t) {
      ax.record_case();
      auto a = inst.osum(t[0], t[1]);
      auto b = inst.osum(t[1], t[0]);
      if (a.has_value() != b.has_value() || (a && !(*a == *b))) {
        ax.record_failure({{inst.show(t[0]), inst.show(t[1])}, show_opt(inst, a), show_opt(inst, b)});
      }
    });
  }
  {
    auto& ax = report.axiom("associativity: (x (+) y) (+) z = x (+) (y (+) z)");
    for_tuples<3>(inst, cases, rng, triple, [&](const std::array<Element, 3>& t) {
      auto xy = inst.osum(t[0], t[1]);
      if (!xy) return;
      auto lhs = inst.osum(*xy, t[2]);
      if (!lhs) return;
      ax.record_case();
      auto yz = inst.osum(t[1], t[2]);
      std::optional<Element> rhs = yz ? inst.osum(t[0], *yz) : std::nullopt;
      if (!rhs || !(*rhs == *lhs)) {
        ax.record_failure({{inst.show(t[0]), inst.show(t[1]), inst.show(t[2])}, inst.show(*lhs), show_opt(inst, rhs)});
      }
    });
  }
  {
    auto& ax = report.axiom("orthosupplement: x (+) x^perp = 1");
    for_tuples<1>(inst, cases, rng, single, [&](const std::array<Element, 1>& t) {
      ax.record_case();
      auto s = inst.osum(t[0], inst.ortho(t[0]));
      if (!s || !(*s == one)) ax.record_failure({{inst.show(t[0])}, inst.show(one), show_opt(inst, s)});
    });
  }
  {
    // Sampled pairs almost never sum to 1, so besides x^perp itself each
    // sampled case also probes a candidate y built from below(x^perp).
    auto& ax = report.axiom("orthosupplement-unique: x (+) y = 1 implies y = x^perp");
    auto probe = [&](const Element& x, const Element& y) {
      auto s = inst.osum(x, y);
      if (!s || !(*s == one)) return;
      const Element expected = inst.ortho(x);
      if (!(y == expected)) ax.record_failure({{inst.show(x), inst.show(y)}, inst.show(expected), inst.show(y)});
    };
    for_tuples<2>(inst, cases, rng, pair, [&](const std::array<Element, 2>& t) {
      ax.record_case();
      probe(t[0], t[1]);
      if (!inst.enumerable()) probe(t[0], inst.ortho(t[0]));
    });
  }
  {
    auto& ax = report.axiom("zero-one: x (+) 1 defined implies x = 0");
    for_tuples<1>(inst, cases, rng, single, [&](const std::array<Element, 1>& t) {
      ax.record_case();
      if (inst.osum(t[0], one) && !(t[0] == zero)) {
        ax.record_failure({{inst.show(t[0])}, "x (+) 1 undefined", "defined"});
      }
    });
    // The zero element itself must be orthogonal to 1.
    ax.record_case();
    if (!inst.osum(zero, one)) ax.record_failure({{inst.show(zero)}, inst.show(one), kUndefined});
  }
  return report;
}

namespace {

UnitScalar sample_scalar(Rng& rng) { return UnitScalar(rng.unit_rational()); }

Element sample_element(const EffectAlgebraInstance& inst, Rng& rng) {
  if (inst.enumerable()) return inst.element_at(rng.below(*inst.carrier_size));
  return inst.sample(rng);
}

}  // namespace

LawReport check_effect_module(const EffectModuleInstance& inst, std::uint64_t seed, std::size_t cases) {
  const auto& alg = inst.algebra;
  LawReport report = check_effect_algebra(alg, seed, cases);
  report.subject = "effect-module " + alg.name;
  Rng rng(seed ^ 0x5eed5eedULL);

  auto& unit = report.axiom("unit-action: 1.x = x");
  auto& assoc = report.axiom("scalar-associativity: (rs).x = r.(s.x)");
  auto& left = report.axiom("scalar-distributivity: (r+s).x = r.x (+) s.x");
  auto& right = report.axiom("vector-distributivity: r.(x (+) y) = r.x (+) r.y");

  for (std::size_t c = 0; c < cases; ++c) {
    Rng r = rng.fork(c);
    const Element x = sample_element(alg, r);
    const UnitScalar a = sample_scalar(r);
    const UnitScalar b = sample_scalar(r);

    unit.record_case();
    if (auto got = inst.act(UnitScalar::one(), x); !(got == x)) unit.record_failure({{alg.show(x)}, alg.show(x), alg.show(got)});

    assoc.record_case();
    {
      auto lhs = inst.act(a * b, x);
      auto rhs = inst.act(a, inst.act(b, x));
      if (!(lhs == rhs)) assoc.record_failure({{a.to_string(), b.to_string(), alg.show(x)}, alg.show(lhs), alg.show(rhs)});
    }

    // s is drawn below 1 - r so that r + s stays a scalar.
    left.record_case();
    {
      const UnitScalar s(b.value() * (Rational(1) - a.value()));
      auto lhs = inst.act(UnitScalar(a.value() + s.value()), x);
      auto rhs = alg.osum(inst.act(a, x), inst.act(s, x));
      if (!rhs || !(*rhs == lhs)) {
        left.record_failure({{a.to_string(), s.to_string(), alg.show(x)}, alg.show(lhs), show_opt(alg, rhs)});
      }
    }

    right.record_case();
    {
      const Element y = alg.sample_below(r, alg.ortho(x));
      auto xy = alg.osum(x, y);
      if (xy) {
        auto lhs = inst.act(a, *xy);
        auto rhs = alg.osum(inst.act(a, x), inst.act(a, y));
        if (!rhs || !(*rhs == lhs)) {
          right.record_failure({{a.to_string(), alg.show(x), alg.show(y)}, alg.show(lhs), show_opt(alg, rhs)});
        }
      }
    }
  }
  return report;
}

namespace {

void hom_algebra_axioms(LawReport& report, const ElementMap& f, const EffectAlgebraInstance& src,
                        const EffectAlgebraInstance& dst, Rng& rng, std::size_t cases) {
  auto& one = report.axiom("preserves-one: f(1) = 1");
  one.record_case();
  if (auto got = f(src.one()); !(got == dst.one())) one.record_failure({{src.show(src.one())}, dst.show(dst.one()), dst.show(got)});

  auto& sum = report.axiom("preserves-sum: f(x (+) y) = f(x) (+) f(y)");
  auto check_pair = [&](const Element& x, const Element& y) {
    auto xy = src.osum(x, y);
    if (!xy) return;
    sum.record_case();
    const Element lhs = f(*xy);
    auto rhs = dst.osum(f(x), f(y));
    if (!rhs || !(*rhs == lhs)) sum.record_failure({{src.show(x), src.show(y)}, dst.show(lhs), show_opt(dst, rhs)});
  };
  if (exhaustive(src, 2)) {
    const std::uint64_t n = *src.carrier_size;
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::uint64_t j = 0; j < n; ++j) check_pair(src.element_at(i), src.element_at(j));
    }
    return;
  }
  for (std::size_t c = 0; c < cases; ++c) {
    Rng r = rng.fork(c);
    const Element x = sample_element(src, r);
    check_pair(x, src.sample_below(r, src.ortho(x)));
  }
}

}  // namespace

LawReport check_hom(const ElementMap& f, const EffectAlgebraInstance& src, const EffectAlgebraInstance& dst,
                    std::uint64_t seed, std::size_t cases) {
  LawReport report{"hom " + src.name + " -> " + dst.name, {}};
  Rng rng(seed);
  hom_algebra_axioms(report, f, src, dst, rng, cases);
  return report;
}

LawReport check_hom(const ElementMap& f, const EffectModuleInstance& src, const EffectModuleInstance& dst,
                    std::uint64_t seed, std::size_t cases) {
  LawReport report{"module-hom " + src.algebra.name + " -> " + dst.algebra.name, {}};
  Rng rng(seed);
  hom_algebra_axioms(report, f, src.algebra, dst.algebra, rng, cases);
  auto& scalar = report.axiom("preserves-scalar: f(r.x) = r.f(x)");
  Rng srng(seed ^ 0xa11ceULL);
  for (std::size_t c = 0; c < cases; ++c) {
    Rng r = srng.fork(c);
    const Element x = sample_element(src.algebra, r);
    const UnitScalar a = sample_scalar(r);
    scalar.record_case();
    const Element lhs = f(src.act(a, x));
    const Element rhs = dst.act(a, f(x));
    if (!(lhs == rhs)) scalar.record_failure({{a.to_string(), src.algebra.show(x)}, dst.algebra.show(rhs), dst.algebra.show(lhs)});
  }
  return report;
}

}  // namespace exmon::effect
