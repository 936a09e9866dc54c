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

#include "skewmat/matroid.h"

#include <algorithm>
#include <cstdio>
#include <set>

namespace skewmat {

std::vector<std::string> default_labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) {
    if (n <= 9) {
      out.push_back(std::to_string(i));
    } else {
      char buf[16];
      std::snprintf(buf, sizeof buf, "e%02d", i);
      out.emplace_back(buf);
    }
  }
  return out;
}

std::vector<std::string> restrict_labels(const std::vector<std::string>& ground,
                                         Subset keep) {
  std::vector<std::string> out;
  for (int e : keep.elements()) out.push_back(ground[e]);
  return out;
}

std::vector<Subset> minimal_sets(std::vector<Subset> sets) {
  std::sort(sets.begin(), sets.end(),
            [](Subset a, Subset b) { return a.size() < b.size(); });
  std::vector<Subset> out;
  for (Subset s : sets) {
    if (s.empty()) continue;
    const bool dominated = std::any_of(out.begin(), out.end(), [&](Subset m) {
      return m.is_subset_of(s);
    });
    if (!dominated) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// contains[S] = S contains some member of `sets`.
std::vector<bool> containment_table(int n, const std::vector<Subset>& sets) {
  std::vector<bool> contains(std::size_t{1} << n, false);
  for (Subset c : sets) contains[c.bits()] = true;
  for (std::uint32_t s = 1; s < contains.size(); ++s) {
    if (contains[s]) continue;
    for (std::uint32_t b = s; b != 0; b &= b - 1) {
      if (contains[s & ~(b & -b)]) {
        contains[s] = true;
        break;
      }
    }
  }
  return contains;
}

void check_ground(const std::vector<std::string>& ground) {
  if (static_cast<int>(ground.size()) > kMaxGroundSize) {
    throw InvalidArgument("ground set larger than " +
                          std::to_string(kMaxGroundSize));
  }
  for (std::size_t i = 1; i < ground.size(); ++i) {
    if (!(ground[i - 1] < ground[i])) {
      throw InvalidArgument("ground labels must be distinct and sorted");
    }
  }
}

}  // namespace

CheckResult check_matroid_circuits(int n, const std::vector<Subset>& circuits) {
  const Subset full = Subset::full(n);
  for (Subset c : circuits) {
    if (c.empty()) return CheckResult::fail("empty circuit");
    if (!c.is_subset_of(full)) return CheckResult::fail("circuit outside ground");
  }
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = 0; j < circuits.size(); ++j) {
      if (i != j && circuits[i].is_subset_of(circuits[j])) {
        return CheckResult::fail(
            "circuits are comparable: bits " +
            std::to_string(circuits[i].bits()) + " and " +
            std::to_string(circuits[j].bits()));
      }
    }
  }
  const auto contains = containment_table(n, circuits);
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    for (std::size_t j = i + 1; j < circuits.size(); ++j) {
      const Subset u = circuits[i] | circuits[j];
      for (int e : (circuits[i] & circuits[j]).elements()) {
        if (!contains[u.without(e).bits()]) {
          return CheckResult::fail(
              "elimination fails for circuits " +
              std::to_string(circuits[i].bits()) + ", " +
              std::to_string(circuits[j].bits()) + " at element " +
              std::to_string(e));
        }
      }
    }
  }
  return CheckResult::pass();
}

SupportMatroid SupportMatroid::from_circuits(std::vector<std::string> ground,
                                             std::vector<Subset> circuits) {
  check_ground(ground);
  std::sort(circuits.begin(), circuits.end());
  circuits.erase(std::unique(circuits.begin(), circuits.end()),
                 circuits.end());
  if (CheckResult r = check_matroid_circuits(static_cast<int>(ground.size()),
                                             circuits);
      !r) {
    throw InvalidArgument("not the circuits of a matroid: " + r.witness);
  }
  SupportMatroid m;
  m.ground_ = std::move(ground);
  m.circuits_ = std::move(circuits);
  m.build();
  return m;
}

SupportMatroid SupportMatroid::from_bases(std::vector<std::string> ground,
                                          const std::vector<Subset>& bases) {
  check_ground(ground);
  const int n = static_cast<int>(ground.size());
  if (bases.empty()) throw InvalidArgument("a matroid needs at least one basis");
  std::vector<bool> independent(std::size_t{1} << n, false);
  for (Subset b : bases) {
    if (b.size() != bases.front().size()) {
      throw InvalidArgument("bases of different sizes");
    }
    for (std::uint32_t s = b.bits();; s = (s - 1) & b.bits()) {
      independent[s] = true;
      if (s == 0) break;
    }
  }
  std::vector<Subset> dependent;
  for (std::uint32_t s = 1; s < independent.size(); ++s) {
    if (!independent[s]) dependent.emplace_back(s);
  }
  SupportMatroid m = from_circuits(std::move(ground), minimal_sets(dependent));
  std::vector<Subset> sorted(bases.begin(), bases.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (m.bases() != sorted) {
    throw InvalidArgument("basis family violates the exchange axiom");
  }
  return m;
}

SupportMatroid SupportMatroid::uniform(int r, int n) {
  std::vector<Subset> circuits;
  if (r < n) {
    for_each_subset_of_size(Subset::full(n), r + 1,
                            [&](Subset s) { circuits.push_back(s); });
  }
  return from_circuits(default_labels(n), std::move(circuits));
}

SupportMatroid SupportMatroid::free_matroid(std::vector<std::string> ground) {
  return from_circuits(std::move(ground), {});
}

void SupportMatroid::build() {
  const int n = size();
  const auto dependent = containment_table(n, circuits_);
  rank_.assign(std::size_t{1} << n, 0);
  for (std::uint32_t s = 1; s < rank_.size(); ++s) {
    if (!dependent[s]) {
      rank_[s] = static_cast<std::uint8_t>(std::popcount(s));
      continue;
    }
    std::uint8_t best = 0;
    for (std::uint32_t b = s; b != 0; b &= b - 1) {
      best = std::max(best, rank_[s & ~(b & -b)]);
    }
    rank_[s] = best;
  }
  const int r = rank();
  std::vector<Subset> co;
  for (std::uint32_t s = 1; s < rank_.size(); ++s) {
    if (rank((full() - Subset(s))) < r) co.emplace_back(s);
  }
  cocircuits_ = minimal_sets(std::move(co));
}

bool SupportMatroid::is_circuit(Subset s) const {
  return std::binary_search(circuits_.begin(), circuits_.end(), s);
}

bool SupportMatroid::is_basis(Subset b) const {
  return b.is_subset_of(full()) && b.size() == rank() && is_independent(b);
}

std::vector<Subset> SupportMatroid::bases() const {
  std::vector<Subset> out;
  for_each_subset_of_size(full(), rank(), [&](Subset s) {
    if (is_independent(s)) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AdjacentBasisPair> SupportMatroid::adjacent_bases() const {
  const auto bs = bases();
  std::vector<AdjacentBasisPair> out;
  for (Subset b : bs) {
    for (Subset c : bs) {
      if ((b - c).size() == 1) out.push_back({b, c});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subset SupportMatroid::greedy_basis(Subset within) const {
  return extend_independent(Subset(), within);
}

Subset SupportMatroid::extend_independent(Subset start, Subset pool) const {
  if (!is_independent(start)) {
    throw InvalidArgument("extend_independent: start set is dependent");
  }
  Subset out = start;
  for (int e : (pool - start).elements()) {
    if (is_independent(out.with(e))) out = out.with(e);
  }
  return out;
}

Subset SupportMatroid::fundamental_circuit(int e, Subset basis) const {
  if (!is_basis(basis) || basis.contains(e) || e < 0 || e >= size()) {
    throw InvalidArgument("fundamental_circuit needs a basis B and e not in B");
  }
  const Subset span = basis.with(e);
  for (Subset c : circuits_) {
    if (c.is_subset_of(span)) return c;
  }
  throw InvalidArgument("no circuit in B + e");
}

Subset SupportMatroid::fundamental_cocircuit(int e, Subset basis) const {
  if (!is_basis(basis) || !basis.contains(e)) {
    throw InvalidArgument("fundamental_cocircuit needs a basis B and e in B");
  }
  const Subset span = (full() - basis).with(e);
  for (Subset d : cocircuits_) {
    if (d.is_subset_of(span)) return d;
  }
  throw InvalidArgument("no cocircuit in (E - B) + e");
}

SupportMatroid SupportMatroid::dual() const {
  SupportMatroid m;
  m.ground_ = ground_;
  m.circuits_ = cocircuits_;
  m.build();
  return m;
}

SupportMatroid SupportMatroid::delete_set(Subset a) const {
  const Subset keep = full() - a;
  std::vector<Subset> out;
  for (Subset c : circuits_) {
    if (!c.intersects(a)) out.push_back(compress(c, keep));
  }
  std::sort(out.begin(), out.end());
  SupportMatroid m;
  m.ground_ = restrict_labels(ground_, keep);
  m.circuits_ = std::move(out);
  m.build();
  return m;
}

SupportMatroid SupportMatroid::contract(Subset a) const {
  const Subset keep = full() - a;
  std::vector<Subset> restricted;
  for (Subset c : circuits_) restricted.push_back(compress(c - a, keep));
  SupportMatroid m;
  m.ground_ = restrict_labels(ground_, keep);
  m.circuits_ = minimal_sets(std::move(restricted));
  m.build();
  return m;
}

void SupportMatroid::require_circuit(Subset c) const {
  if (!is_circuit(c)) throw InvalidArgument("not a circuit: " + format(c));
}

bool SupportMatroid::is_modular_pair(Subset c1, Subset c2) const {
  return c1 != c2 && is_modular_family({c1, c2});
}

bool SupportMatroid::is_modular_family(const std::vector<Subset>& family) const {
  Subset u;
  for (Subset c : family) {
    require_circuit(c);
    u = u | c;
  }
  return nullity(u) == static_cast<int>(family.size());
}

int SupportMatroid::lattice_height(Subset a) const {
  std::vector<Subset> inside;
  for (Subset c : circuits_) {
    if (c.is_subset_of(a)) inside.push_back(c);
  }
  std::set<std::uint32_t> unions{0};
  std::vector<Subset> frontier{Subset()};
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (Subset s : frontier) {
      for (Subset c : inside) {
        const Subset u = s | c;
        if (unions.insert(u.bits()).second) next.push_back(u);
      }
    }
    frontier = std::move(next);
  }
  if (!unions.contains(a.bits())) {
    throw InvalidArgument("not a union of circuits: " + format(a));
  }
  std::vector<Subset> order;
  for (std::uint32_t b : unions) order.emplace_back(b);
  std::sort(order.begin(), order.end(),
            [](Subset x, Subset y) { return x.size() < y.size(); });
  std::vector<int> height(order.size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (order[j] != order[i] && order[j].is_subset_of(order[i])) {
        height[i] = std::max(height[i], height[j] + 1);
      }
    }
    if (order[i] == a) return height[i];
  }
  return 0;
}

int SupportMatroid::index_of(std::string_view label) const {
  const auto it = std::lower_bound(ground_.begin(), ground_.end(), label);
  if (it == ground_.end() || *it != label) {
    throw InvalidArgument("unknown ground element '" + std::string(label) + "'");
  }
  return static_cast<int>(it - ground_.begin());
}

Subset SupportMatroid::subset_of(const std::vector<std::string>& labels) const {
  Subset s;
  for (const auto& l : labels) s = s.with(index_of(l));
  return s;
}

std::vector<std::string> SupportMatroid::labels_of(Subset s) const {
  return restrict_labels(ground_, s);
}

std::string SupportMatroid::format(Subset s) const {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ",";
    out += ground_[e];
    first = false;
  }
  return out + "}";
}

}  // namespace skewmat
