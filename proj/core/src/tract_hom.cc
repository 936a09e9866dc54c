// Copyright 2026 The skewmat Authors.
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

#include "skewmat/tract_hom.h"

#include <map>
#include <random>

namespace skewmat {

TractHom TractHom::to_krasner(const Tract& source) {
  const Tract k = Tract::krasner();
  return TractHom(source, k, "to_krasner",
                  [k](const GroupElement&) { return k.one(); });
}

TractHom TractHom::identity(const Tract& t) {
  return TractHom(t, t, "identity", [](const GroupElement& g) { return g; });
}

TractHom TractHom::tropical_to_ultratriangle() {
  const Tract u = Tract::ultratriangle();
  return TractHom(
      Tract::tropical(), u, "tropical_to_ultratriangle",
      [u](const GroupElement& g) {
        const Rational& a = g.value();
        if (a.denominator() != 1) {
          throw InvalidArgument(
              "tropical_to_ultratriangle is defined on integer values only, "
              "got " + format_rational(a));
        }
        const std::int64_t n = a.numerator();
        if (n > 62 || n < -62) {
          throw InvalidArgument("tropical_to_ultratriangle: exponent " +
                                std::to_string(n) + " out of range");
        }
        const std::int64_t p = std::int64_t{1} << (n < 0 ? -n : n);
        return u.element(n < 0 ? Rational(1, p) : Rational(p));
      });
}

TractHom TractHom::from_table(
    const Tract& source, const Tract& target,
    const std::vector<std::pair<GroupElement, GroupElement>>& table) {
  if (!source.finite()) {
    throw InvalidArgument("element tables need a finite source tract");
  }
  std::map<Rational, GroupElement> lookup;
  for (const auto& [from, to] : table) {
    if (!source.contains(from) || !target.contains(to)) {
      throw InvalidArgument("hom table entry outside source or target");
    }
    if (!lookup.emplace(from.value(), to).second) {
      throw InvalidArgument("hom table maps " + source.format(from) +
                            " twice");
    }
  }
  for (const auto& g : source.elements()) {
    if (!lookup.contains(g.value())) {
      throw InvalidArgument("hom table has no image for " + source.format(g));
    }
  }
  TractHom f(source, target, "table",
             [lookup](const GroupElement& g) { return lookup.at(g.value()); });
  const CheckResult r = check_hom(f);
  if (!r) throw InvalidArgument("invalid homomorphism: " + r.witness);
  return f;
}

TractHom TractHom::from_function(const Tract& source, const Tract& target,
                                 std::string name, Map map) {
  return TractHom(source, target, std::move(name), std::move(map));
}

GroupElement TractHom::apply(const GroupElement& g) const {
  if (!source_.contains(g)) {
    throw InvalidArgument("element outside the source of " + name_);
  }
  return map_(g);
}

TractValue TractHom::apply(const TractValue& v) const {
  if (v.is_zero()) return v;
  return apply(v.element());
}

FormalSum TractHom::apply(const FormalSum& s) const {
  FormalSum out;
  for (const auto& g : s.terms()) out.add(apply(g));
  return out;
}

CheckResult check_hom(const TractHom& f, const AxiomCheckOptions& options) {
  const Tract& s = f.source();
  const Tract& t = f.target();
  const auto pool = s.sample_pool();
  std::vector<GroupElement> domain;
  for (const auto& g : pool) {
    try {
      f.apply(g);
      domain.push_back(g);
    } catch (const InvalidArgument&) {
      // outside the domain of a partial map
    }
  }
  if (!(f.apply(s.one()) == t.one())) return CheckResult::fail("f(1) != 1");
  for (const auto& a : domain) {
    for (const auto& b : domain) {
      const GroupElement ab = s.mul(a, b);
      GroupElement image = t.one();
      try {
        image = f.apply(ab);
      } catch (const InvalidArgument&) {
        continue;
      }
      if (!(image == t.mul(f.apply(a), f.apply(b)))) {
        return CheckResult::fail("f(" + s.format(a) + "*" + s.format(b) +
                                 ") != f(" + s.format(a) + ")*f(" +
                                 s.format(b) + ")");
      }
    }
  }
  auto check_sum = [&](const FormalSum& sum) -> CheckResult {
    if (s.is_null(sum) && !t.is_null(f.apply(sum))) {
      std::string text;
      for (const auto& g : sum.terms()) text += s.format(g) + " ";
      return CheckResult::fail("null sum { " + text + "} maps to a non-null sum");
    }
    return CheckResult::pass();
  };
  if (s.finite()) {
    CheckResult result;
    for_each_multiset(domain, options.max_length, [&](const FormalSum& sum) {
      if (result) result = check_sum(sum);
    });
    return result;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> len(0, options.max_length);
  std::uniform_int_distribution<std::size_t> pick(0, domain.size() - 1);
  for (std::size_t i = 0; i < options.samples; ++i) {
    FormalSum sum;
    const std::size_t n = len(rng);
    for (std::size_t j = 0; j < n; ++j) sum.add(domain[pick(rng)]);
    if (CheckResult r = check_sum(sum); !r) return r;
  }
  return CheckResult::pass();
}

TractHom make_hom(std::string_view name, const Tract& source) {
  if (name == "to_krasner") return TractHom::to_krasner(source);
  if (name == "identity") return TractHom::identity(source);
  if (name == "tropical_to_ultratriangle") {
    if (!(source == Tract::tropical())) {
      throw InvalidArgument("tropical_to_ultratriangle needs a tropical source");
    }
    return TractHom::tropical_to_ultratriangle();
  }
  throw InvalidArgument("unknown homomorphism '" + std::string(name) + "'");
}

}  // namespace skewmat
