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

#include "skewmat/plucker.h"

#include <algorithm>

namespace skewmat {

PluckerMap::PluckerMap(SupportMatroid matroid, Tract tract, Side side,
                       Values values)
    : matroid_(std::move(matroid)),
      tract_(std::move(tract)),
      side_(side),
      values_(std::move(values)) {
  const auto pairs = matroid_.adjacent_bases();
  if (pairs.size() != values_.size()) {
    throw InvalidArgument("coordinate map has " +
                          std::to_string(values_.size()) + " values for " +
                          std::to_string(pairs.size()) +
                          " adjacent basis pairs");
  }
  for (const auto& p : pairs) {
    const auto it = values_.find(p);
    if (it == values_.end()) {
      throw InvalidArgument("coordinate map is missing [" +
                            matroid_.format(p.from) + ", " +
                            matroid_.format(p.to) + "]");
    }
    if (!tract_.contains(it->second)) {
      throw InvalidArgument("coordinate value outside " + tract_.name());
    }
  }
}

const GroupElement& PluckerMap::at(Subset from, Subset to) const {
  const auto it = values_.find({from, to});
  if (it == values_.end()) {
    throw InvalidArgument("[" + matroid_.format(from) + ", " +
                          matroid_.format(to) +
                          "] is not an adjacent basis pair");
  }
  return it->second;
}

bool PluckerMap::defined(Subset from, Subset to) const {
  return values_.contains({from, to});
}

PluckerMap coords_from_signature(const Signature& sig, const SupportMatroid& m) {
  if (CheckResult r = check_signature(sig, m); !r) {
    throw InvalidArgument("not a signature of the matroid: " + r.witness);
  }
  const Tract& t = sig.tract();
  PluckerMap::Values values;
  for (const auto& p : m.adjacent_bases()) {
    const int a = (p.from - p.to).min();
    const int b = (p.to - p.from).min();
    const Subset c = m.fundamental_circuit(b, p.from);
    const TVector x = sig.with_support(c).front();
    values.emplace(p, t.mul(t.epsilon(), ratio(t, sig.side(), x, a, b)));
  }
  return PluckerMap(m, t, sig.side(), std::move(values));
}

PluckerMap coords_from_signature(const Signature& sig) {
  return coords_from_signature(sig, sig.underlying());
}

Signature signature_from_coords(const PluckerMap& pm) {
  if (CheckResult r = check_coordinates(pm); !r) {
    throw AxiomViolation("coordinate axioms fail: " + r.witness);
  }
  const SupportMatroid& m = pm.matroid();
  const Tract& t = pm.tract();
  std::vector<TVector> out;
  for (Subset c : m.circuits()) {
    TVector x = TVector::zeros(m.size());
    const int a0 = c.min();
    x[a0] = t.one();
    const Subset basis = m.extend_independent(c.without(a0), m.full() - c);
    for (int b : c.without(a0).elements()) {
      const Subset from = basis.without(b).with(a0);
      x[b] = t.mul(t.epsilon(), pm.at(from, basis));
    }
    out.push_back(std::move(x));
  }
  Signature sig(t, m.ground(), pm.side(), std::move(out));
  if (!(coords_from_signature(sig, m) == pm)) {
    throw AxiomViolation(
        "coordinates do not come from a signature: derived circuit entries "
        "are inconsistent");
  }
  return sig;
}

namespace {

struct Checker {
  const PluckerMap& pm;
  const SupportMatroid& m;
  const Tract& t;
  Side side;
  int n;
  int r;

  explicit Checker(const PluckerMap& map)
      : pm(map),
        m(map.matroid()),
        t(map.tract()),
        side(map.side()),
        n(map.matroid().size()),
        r(map.matroid().rank()) {}

  bool basis(Subset s) const { return m.is_basis(s); }
  const GroupElement& c(Subset from, Subset to) const { return pm.at(from, to); }
  GroupElement prod(const GroupElement& x, const GroupElement& y) const {
    return side_product(t, side, {x, y});
  }
  GroupElement prod(const GroupElement& x, const GroupElement& y,
                    const GroupElement& z) const {
    return side_product(t, side, {x, y, z});
  }
  std::string name(const char* axiom, Subset f,
                   std::initializer_list<int> elems) const {
    std::string out = std::string(axiom) + " fails for F=" + m.format(f);
    const char* letters = "abcd";
    int i = 0;
    for (int e : elems) {
      out += std::string(", ") + letters[i++] + "=" + m.ground()[e];
    }
    return out;
  }

  // Calls fn(F, elems...) for every F of size `fsize` and every ordered
  // tuple of `k` distinct elements outside F.
  template <typename Fn>
  CheckResult for_configs(int fsize, int k, Fn&& fn) const {
    if (fsize < 0) return CheckResult::pass();
    CheckResult result;
    for_each_subset_of_size(m.full(), fsize, [&](Subset f) {
      if (!result) return;
      const std::vector<int> rest = (m.full() - f).elements();
      std::vector<int> tuple;
      std::vector<bool> used(rest.size(), false);
      auto rec = [&](auto&& self) -> void {
        if (!result) return;
        if (static_cast<int>(tuple.size()) == k) {
          result = fn(f, tuple);
          return;
        }
        for (std::size_t i = 0; i < rest.size(); ++i) {
          if (used[i]) continue;
          used[i] = true;
          tuple.push_back(rest[i]);
          self(self);
          tuple.pop_back();
          used[i] = false;
        }
      };
      rec(rec);
    });
    return result;
  }

  CheckResult p1() const {
    for (const auto& [p, v] : pm.values()) {
      if (!(prod(v, c(p.to, p.from)) == t.one())) {
        return CheckResult::fail("P1 fails for [" + m.format(p.from) + ", " +
                                 m.format(p.to) + "]");
      }
    }
    return CheckResult::pass();
  }

  CheckResult p2() const {
    return for_configs(r - 2, 3, [&](Subset f, const std::vector<int>& e) {
      const int a = e[0], b = e[1], cc = e[2];
      const Subset fab = f.with(a).with(b), fac = f.with(a).with(cc),
                   fbc = f.with(b).with(cc);
      if (!basis(fab) || !basis(fac) || !basis(fbc)) return CheckResult::pass();
      if (!(prod(c(fac, fbc), c(fab, fac), c(fbc, fab)) == t.epsilon())) {
        return CheckResult::fail(name("P2", f, {a, b, cc}));
      }
      return CheckResult::pass();
    });
  }

  CheckResult p3() const {
    return for_configs(r - 1, 3, [&](Subset f, const std::vector<int>& e) {
      const Subset fa = f.with(e[0]), fb = f.with(e[1]), fc = f.with(e[2]);
      if (!basis(fa) || !basis(fb) || !basis(fc)) return CheckResult::pass();
      if (!(prod(c(fa, fb), c(fb, fc), c(fc, fa)) == t.one())) {
        return CheckResult::fail(name("P3", f, {e[0], e[1], e[2]}));
      }
      return CheckResult::pass();
    });
  }

  // LC3 when `either` is false, P4 otherwise.
  CheckResult p4(bool either) const {
    return for_configs(r - 2, 4, [&](Subset f, const std::vector<int>& e) {
      const int a = e[0], b = e[1], cc = e[2], d = e[3];
      const Subset fac = f.with(a).with(cc), fad = f.with(a).with(d),
                   fbc = f.with(b).with(cc), fbd = f.with(b).with(d);
      if (!basis(fac) || !basis(fad) || !basis(fbc) || !basis(fbd)) {
        return CheckResult::pass();
      }
      const bool fab = basis(f.with(a).with(b));
      const bool fcd = basis(f.with(cc).with(d));
      const bool applies = either ? (!fab || !fcd) : !fab;
      if (applies && !(c(fac, fbc) == c(fad, fbd))) {
        return CheckResult::fail(name(either ? "P4" : "LC3", f, {a, b, cc, d}));
      }
      return CheckResult::pass();
    });
  }

  CheckResult p5() const {
    return for_configs(r - 2, 4, [&](Subset f, const std::vector<int>& e) {
      const int a = e[0], b = e[1], cc = e[2], d = e[3];
      const Subset fab = f.with(a).with(b), fac = f.with(a).with(cc),
                   fad = f.with(a).with(d), fbc = f.with(b).with(cc),
                   fbd = f.with(b).with(d), fcd = f.with(cc).with(d);
      for (Subset s : {fab, fac, fad, fbc, fbd, fcd}) {
        if (!basis(s)) return CheckResult::pass();
      }
      const FormalSum sum{t.epsilon(), prod(c(fbd, fab), c(fac, fcd)),
                          prod(c(fad, fab), c(fbc, fcd))};
      if (!t.is_null(sum)) {
        return CheckResult::fail(name("P5", f, {a, b, cc, d}));
      }
      return CheckResult::pass();
    });
  }

  CheckResult strong_exchange() const {
    if (r < 1 || r + 1 > n) return CheckResult::pass();
    CheckResult result;
    for_each_subset_of_size(m.full(), r + 1, [&](Subset i) {
      for_each_subset_of_size(m.full(), r - 1, [&](Subset j) {
        if (!result || (i - j).size() < 3) return;
        std::vector<int> i1;
        for (int x : i.elements()) {
          if (basis(i.without(x)) && basis(j.with(x))) i1.push_back(x);
        }
        const std::string where = " for I=" + m.format(i) + ", J=" + m.format(j);
        if (i1.size() == 2) {
          for (int s = 0; s < 2; ++s) {
            const int a = i1[s], b = i1[1 - s];
            if (!(c(i.without(a), i.without(b)) == c(j.with(b), j.with(a)))) {
              result = CheckResult::fail("P4' fails" + where);
              return;
            }
          }
        } else if (i1.size() >= 3) {
          for (int z : i1) {
            FormalSum sum{t.epsilon()};
            for (int x : i1) {
              if (x == z) continue;
              sum.add(prod(c(i.without(x), i.without(z)),
                           c(j.with(x), j.with(z))));
            }
            if (!t.is_null(sum)) {
              result = CheckResult::fail("P5' fails" + where + ", z=" +
                                         m.ground()[z]);
              return;
            }
          }
        }
      });
    });
    return result;
  }
};

}  // namespace

CheckResult check_coordinates(const PluckerMap& pm) {
  const Checker ck(pm);
  if (CheckResult r = ck.p1(); !r) return r;
  if (CheckResult r = ck.p2(); !r) return r;
  return ck.p4(false);
}

CheckResult check_weak_qp(const PluckerMap& pm) {
  const Checker ck(pm);
  for (auto step : {&Checker::p1, &Checker::p2, &Checker::p3, &Checker::p5}) {
    if (CheckResult r = (ck.*step)(); !r) return r;
  }
  return ck.p4(true);
}

CheckResult check_strong_qp(const PluckerMap& pm) {
  const Checker ck(pm);
  for (auto step : {&Checker::p1, &Checker::p2, &Checker::p3}) {
    if (CheckResult r = (ck.*step)(); !r) return r;
  }
  return ck.strong_exchange();
}

PluckerMap dual_coords(const PluckerMap& pm) {
  const SupportMatroid& m = pm.matroid();
  const Tract& t = pm.tract();
  SupportMatroid md = m.dual();
  PluckerMap::Values values;
  const Subset e = m.full();
  for (const auto& p : md.adjacent_bases()) {
    values.emplace(p, t.mul(t.epsilon(), t.conj(pm.at(e - p.from, e - p.to))));
  }
  return PluckerMap(std::move(md), t, flip(pm.side()), std::move(values));
}

std::vector<Subset> contraction_choices(const SupportMatroid& m, Subset a) {
  std::vector<Subset> out;
  const int ra = m.rank(a);
  for_each_subset_of_size(a, ra, [&](Subset s) {
    if (m.is_independent(s)) out.push_back(s);
  });
  return out;
}

std::vector<Subset> deletion_choices(const SupportMatroid& m, Subset a) {
  std::vector<Subset> out;
  const Subset rest = m.full() - a;
  const int need = m.rank() - m.rank(rest);
  for_each_subset_of_size(a, need, [&](Subset s) {
    if (m.rank(rest | s) == m.rank()) out.push_back(s);
  });
  return out;
}

namespace {

PluckerMap shifted_minor(const PluckerMap& pm, SupportMatroid minor, Subset a,
                         Subset extra) {
  const Subset keep = pm.matroid().full() - a;
  PluckerMap::Values values;
  for (const auto& p : minor.adjacent_bases()) {
    values.emplace(p, pm.at(expand(p.from, keep) | extra,
                            expand(p.to, keep) | extra));
  }
  return PluckerMap(std::move(minor), pm.tract(), pm.side(), std::move(values));
}

}  // namespace

PluckerMap contract_coords(const PluckerMap& pm, Subset a) {
  return contract_coords(pm, a, pm.matroid().greedy_basis(a));
}

PluckerMap contract_coords(const PluckerMap& pm, Subset a, Subset i_a) {
  const SupportMatroid& m = pm.matroid();
  if (!i_a.is_subset_of(a) || !m.is_independent(i_a) ||
      i_a.size() != m.rank(a)) {
    throw InvalidArgument("I_A must be a maximal independent subset of A");
  }
  return shifted_minor(pm, m.contract(a), a, i_a);
}

PluckerMap delete_coords(const PluckerMap& pm, Subset a) {
  const SupportMatroid& m = pm.matroid();
  const Subset rest = m.full() - a;
  const Subset spanning = m.extend_independent(m.greedy_basis(rest), a);
  return delete_coords(pm, a, spanning & a);
}

PluckerMap delete_coords(const PluckerMap& pm, Subset a, Subset j_a) {
  const SupportMatroid& m = pm.matroid();
  const Subset rest = m.full() - a;
  if (!j_a.is_subset_of(a) || m.rank(rest | j_a) != m.rank() ||
      j_a.size() != m.rank() - m.rank(rest)) {
    throw InvalidArgument(
        "J_A must be a minimal subset of A with (E - A) + J_A spanning");
  }
  return shifted_minor(pm, m.delete_set(a), a, j_a);
}

CheckResult pivot_check(const PluckerMap& pm, const TVector& x) {
  const SupportMatroid& m = pm.matroid();
  const Tract& t = pm.tract();
  const Subset s = x.support();
  if (x.size() != m.size() || !m.is_circuit(s)) {
    throw InvalidArgument("pivot_check needs a circuit vector");
  }
  const Subset i = m.extend_independent(s.without(s.min()), m.full() - s)
                       .with(s.min());
  for (int x1 : s.elements()) {
    for (int x2 : s.elements()) {
      if (x1 == x2) continue;
      const GroupElement lhs = ratio(t, pm.side(), x, x1, x2);
      const GroupElement rhs =
          t.mul(t.epsilon(), pm.at(i.without(x2), i.without(x1)));
      if (!(lhs == rhs)) {
        return CheckResult::fail("pivoting fails for X=" + format_vector(t, x) +
                                 " at x1=" + m.ground()[x1] +
                                 ", x2=" + m.ground()[x2]);
      }
    }
  }
  return CheckResult::pass();
}

CheckResult dual_pivot_check(const PluckerMap& pm, const TVector& y) {
  const SupportMatroid& m = pm.matroid();
  const Tract& t = pm.tract();
  const Subset s = y.support();
  if (y.size() != m.size() ||
      !std::binary_search(m.cocircuits().begin(), m.cocircuits().end(), s)) {
    throw InvalidArgument("dual_pivot_check needs a cocircuit vector");
  }
  const SupportMatroid md = m.dual();
  const Subset l = md.extend_independent(s.without(s.min()), m.full() - s)
                       .with(s.min());
  const Subset j = m.full() - l;
  for (int y1 : s.elements()) {
    for (int y2 : s.elements()) {
      if (y1 == y2) continue;
      const GroupElement lhs = ratio(t, flip(pm.side()), y, y2, y1);
      const GroupElement rhs = t.conj(pm.at(j.with(y1), j.with(y2)));
      if (!(lhs == rhs)) {
        return CheckResult::fail("dual pivoting fails for Y=" +
                                 format_vector(t, y) + " at y1=" +
                                 m.ground()[y1] + ", y2=" + m.ground()[y2]);
      }
    }
  }
  return CheckResult::pass();
}

}  // namespace skewmat
