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

#include "skewmat/dual_pair.h"

#include <algorithm>
#include <cmath>

namespace skewmat {

FormalSum dot(const Tract& t, const TVector& x, const TVector& y) {
  if (x.size() != y.size()) throw InvalidArgument("dot: length mismatch");
  FormalSum out;
  for (int e = 0; e < x.size(); ++e) {
    if (x[e].nonzero() && y[e].nonzero()) out.add(t.mul(x[e], t.conj(y[e])));
  }
  return out;
}

bool is_orthogonal(const Tract& t, const TVector& x, const TVector& y) {
  return t.is_null(dot(t, x, y));
}

namespace {

// x . (y * beta) null for every beta. Left scalings of x never matter since
// null sums are closed under the left action.
bool orthogonal_to_orbit(const Tract& t, const TVector& x, const TVector& y) {
  if (t.commutative()) return is_orthogonal(t, x, y);
  for (const auto& beta : t.sample_pool()) {
    if (!is_orthogonal(t, x, right_scale(t, y, beta))) return false;
  }
  return true;
}

template <typename Fn>
void for_each_vector(int n, const std::vector<TractValue>& values, Fn&& fn) {
  std::vector<std::size_t> pos(n, 0);
  TVector v = TVector::zeros(n);
  for (int e = 0; e < n; ++e) v[e] = values[0];
  while (true) {
    fn(v);
    int e = n - 1;
    while (e >= 0 && pos[e] + 1 == values.size()) {
      pos[e] = 0;
      v[e] = values[0];
      --e;
    }
    if (e < 0) return;
    ++pos[e];
    v[e] = values[pos[e]];
  }
}

std::vector<TractValue> value_set(const Tract& t,
                                  const std::vector<GroupElement>& pool) {
  std::vector<TractValue> out{TractValue::zero()};
  if (pool.empty()) {
    if (!t.finite()) {
      throw InvalidArgument(t.name() +
                            " is infinite: enumeration needs a value pool");
    }
    for (const auto& g : t.elements()) out.emplace_back(g);
  } else {
    for (const auto& g : pool) {
      if (!t.contains(g)) throw InvalidArgument("pool value outside " + t.name());
      out.emplace_back(g);
    }
  }
  return out;
}

void check_cap(std::size_t values, int n, std::uint64_t cap) {
  if (std::pow(static_cast<double>(values), n) > static_cast<double>(cap)) {
    throw CapExceeded("enumeration of " + std::to_string(values) + "^" +
                      std::to_string(n) + " vectors exceeds the cap of " +
                      std::to_string(cap));
  }
}

}  // namespace

CheckResult check_dual_pair(const DualPair& dp, PairMode mode) {
  const Signature& c = dp.circuits;
  const Signature& d = dp.cocircuits;
  if (!(c.tract() == d.tract())) {
    return CheckResult::fail("circuits and cocircuits use different tracts");
  }
  if (d.side() != flip(c.side())) {
    return CheckResult::fail("cocircuits must live on the opposite side");
  }
  if (CheckResult r = check_signature(c, dp.matroid); !r) {
    return CheckResult::fail("circuits: " + r.witness);
  }
  if (CheckResult r = check_signature(d, dp.matroid.dual()); !r) {
    return CheckResult::fail("cocircuits: " + r.witness);
  }
  const Tract& t = c.tract();
  const Signature& left = c.side() == Side::kLeft ? c : d;
  const Signature& right = c.side() == Side::kLeft ? d : c;
  for (const auto& x : left.reps()) {
    for (const auto& y : right.reps()) {
      if (mode == PairMode::kWeak && (x.support() & y.support()).size() > 3) {
        continue;
      }
      if (!orthogonal_to_orbit(t, x, y)) {
        std::string sum;
        const FormalSum products = dot(t, x, y);
        for (const auto& g : products.terms()) sum += " " + t.format(g);
        return CheckResult::fail("not orthogonal: " + format_vector(t, x) +
                                 " . " + format_vector(t, y) + " = {" + sum +
                                 " }");
      }
    }
  }
  return CheckResult::pass();
}

Signature cocircuits_constructive(const Signature& sig) {
  if (CheckResult r = check_signature(sig); !r) {
    throw InvalidArgument("not a signature: " + r.witness);
  }
  const SupportMatroid m = sig.underlying();
  const Tract& t = sig.tract();
  const Side side = sig.side();
  const GroupElement eps = t.epsilon();
  auto circuit_through = [&](Subset a, int e, int f) {
    return sig.with_support(m.fundamental_circuit(f, a.with(e))).front();
  };
  std::vector<TVector> out;
  for (Subset d : m.cocircuits()) {
    const Subset a = m.greedy_basis(m.full() - d);
    const int e0 = d.min();
    TVector w = TVector::zeros(m.size());
    w[e0] = t.one();
    for (int f : d.without(e0).elements()) {
      const TVector x = circuit_through(a, e0, f);
      w[f] = t.inv(t.mul(eps, t.conj(ratio(t, side, x, e0, f))));
    }
    for (int e : d.elements()) {
      for (int f : d.elements()) {
        if (e == f) continue;
        const TVector x = circuit_through(a, e, f);
        if (!(ratio(t, flip(side), w, f, e) ==
              t.mul(eps, t.conj(ratio(t, side, x, e, f))))) {
          throw AxiomViolation("cocircuit " + m.format(d) +
                               " is not well defined at e=" + m.ground()[e] +
                               ", f=" + m.ground()[f]);
        }
      }
    }
    out.push_back(std::move(w));
  }
  return Signature(t, sig.ground(), flip(side), std::move(out));
}

Signature cocircuits_by_orthogonality(const Signature& sig,
                                      std::uint64_t cap) {
  const Tract& t = sig.tract();
  const auto values = value_set(t, {});
  const int n = sig.size();
  check_cap(values.size(), n, cap);
  std::vector<TVector> found;
  for_each_vector(n, values, [&](const TVector& y) {
    if (y.is_zero()) return;
    for (const auto& x : sig.reps()) {
      const bool ok = sig.side() == Side::kLeft ? is_orthogonal(t, x, y)
                                                : orthogonal_to_orbit(t, y, x);
      if (!ok) return;
    }
    found.push_back(y);
  });
  std::vector<Subset> supports;
  for (const auto& y : found) supports.push_back(y.support());
  const auto minimal = minimal_sets(supports);
  std::vector<TVector> out;
  for (const auto& y : found) {
    if (std::binary_search(minimal.begin(), minimal.end(), y.support())) {
      out.push_back(y);
    }
  }
  return Signature(t, sig.ground(), flip(sig.side()), std::move(out));
}

DualTMatroid dual_tmatroid(const Signature& sig) {
  Signature co = cocircuits_constructive(sig);
  const SupportMatroid m = sig.underlying();
  PluckerMap coords = dual_coords(coords_from_signature(sig, m));
  SupportMatroid md = m.dual();
  if (!(coords_from_signature(co, md) == coords)) {
    throw AxiomViolation(
        "dual coordinates differ from the coordinates of the cocircuits");
  }
  return {std::move(co), std::move(coords), std::move(md)};
}

namespace {

TVector restrict_vector(const TVector& x, Subset keep) {
  std::vector<TractValue> out;
  for (int e : keep.elements()) out.push_back(x[e]);
  return TVector(std::move(out));
}

}  // namespace

Signature minors(const Signature& sig, Subset del, Subset con) {
  if (del.intersects(con)) {
    throw InvalidArgument("deleted and contracted sets overlap");
  }
  const Subset full = Subset::full(sig.size());
  if (!(del | con).is_subset_of(full)) {
    throw InvalidArgument("minor sets outside the ground set");
  }
  const Subset keep = full - del - con;
  std::vector<TVector> restricted;
  for (const auto& x : sig.reps()) {
    if (x.support().intersects(del)) continue;
    TVector r = restrict_vector(x, keep);
    if (!r.is_zero()) restricted.push_back(std::move(r));
  }
  std::vector<Subset> supports;
  for (const auto& r : restricted) supports.push_back(r.support());
  const auto minimal = minimal_sets(supports);
  std::vector<TVector> out;
  for (auto& r : restricted) {
    if (std::binary_search(minimal.begin(), minimal.end(), r.support())) {
      out.push_back(std::move(r));
    }
  }
  return Signature(sig.tract(), restrict_labels(sig.ground(), keep),
                   sig.side(), std::move(out));
}

std::vector<TVector> vectors(const Signature& sig,
                             const std::vector<GroupElement>& pool) {
  const Tract& t = sig.tract();
  const auto values = value_set(t, pool);
  check_cap(values.size(), sig.size(), kDefaultEnumerationCap);
  const Signature co = cocircuits_constructive(sig);
  std::vector<TVector> out;
  for_each_vector(sig.size(), values, [&](const TVector& v) {
    for (const auto& y : co.reps()) {
      const bool ok = sig.side() == Side::kLeft ? orthogonal_to_orbit(t, v, y)
                                                : is_orthogonal(t, y, v);
      if (!ok) return;
    }
    out.push_back(v);
  });
  return out;
}

std::vector<TVector> covectors(const Signature& sig,
                               const std::vector<GroupElement>& pool) {
  const Tract& t = sig.tract();
  const auto values = value_set(t, pool);
  check_cap(values.size(), sig.size(), kDefaultEnumerationCap);
  std::vector<TVector> out;
  for_each_vector(sig.size(), values, [&](const TVector& u) {
    for (const auto& x : sig.reps()) {
      const bool ok = sig.side() == Side::kLeft ? is_orthogonal(t, x, u)
                                                : orthogonal_to_orbit(t, u, x);
      if (!ok) return;
    }
    out.push_back(u);
  });
  return out;
}

bool is_perfect_instance(const Signature& sig,
                         const std::vector<GroupElement>& pool) {
  const Tract& t = sig.tract();
  const auto vs = vectors(sig, pool);
  const auto us = covectors(sig, pool);
  for (const auto& v : vs) {
    for (const auto& u : us) {
      const bool ok = sig.side() == Side::kLeft ? is_orthogonal(t, v, u)
                                                : is_orthogonal(t, u, v);
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace skewmat
