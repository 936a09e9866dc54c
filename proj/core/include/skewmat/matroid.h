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

#ifndef SKEWMAT_MATROID_H_
#define SKEWMAT_MATROID_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "skewmat/error.h"
#include "skewmat/subset.h"

namespace skewmat {

// Ordered pair of bases (from, to) with from \ to = {a}, to \ from = {b}.
struct AdjacentBasisPair {
  Subset from;
  Subset to;

  friend bool operator==(const AdjacentBasisPair&,
                         const AdjacentBasisPair&) = default;
  friend bool operator<(const AdjacentBasisPair& x,
                        const AdjacentBasisPair& y) {
    if (!(x.from == y.from)) return x.from < y.from;
    return x.to < y.to;
  }
};

// Classical circuit axioms: nonempty, pairwise incomparable, weak
// elimination.
CheckResult check_matroid_circuits(int n, const std::vector<Subset>& circuits);

// "1".."n" for n <= 9, otherwise zero-padded "e01".."enn" so that string
// order matches index order.
std::vector<std::string> default_labels(int n);

class SupportMatroid {
 public:
  SupportMatroid() = default;

  // Throws InvalidArgument if the circuits violate the axioms or the ground
  // labels are not strictly increasing.
  static SupportMatroid from_circuits(std::vector<std::string> ground,
                                      std::vector<Subset> circuits);
  static SupportMatroid from_bases(std::vector<std::string> ground,
                                   const std::vector<Subset>& bases);
  static SupportMatroid uniform(int r, int n);
  static SupportMatroid free_matroid(std::vector<std::string> ground);

  const std::vector<std::string>& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.size()); }
  Subset full() const { return Subset::full(size()); }
  // Sorted.
  const std::vector<Subset>& circuits() const { return circuits_; }
  const std::vector<Subset>& cocircuits() const { return cocircuits_; }
  bool is_circuit(Subset s) const;

  int rank(Subset a) const { return rank_[a.bits()]; }
  int rank() const { return rank(full()); }
  int nullity(Subset a) const { return a.size() - rank(a); }
  bool is_independent(Subset a) const { return rank(a) == a.size(); }
  bool is_basis(Subset b) const;
  std::vector<Subset> bases() const;
  std::vector<AdjacentBasisPair> adjacent_bases() const;

  // Lexicographically least maximal independent subset of `within`.
  Subset greedy_basis(Subset within) const;
  // Greedily extends the independent set `start` by elements of `pool`.
  Subset extend_independent(Subset start, Subset pool) const;

  // Unique circuit in B + e, for e outside the basis B.
  Subset fundamental_circuit(int e, Subset basis) const;
  // Unique cocircuit in (E - B) + e, for e in the basis B.
  Subset fundamental_cocircuit(int e, Subset basis) const;

  SupportMatroid dual() const;
  // Ground of the result is E - a, re-indexed in order.
  SupportMatroid delete_set(Subset a) const;
  SupportMatroid contract(Subset a) const;

  // nullity(union) == family size; inputs must be circuits.
  bool is_modular_pair(Subset c1, Subset c2) const;
  bool is_modular_family(const std::vector<Subset>& family) const;
  // Longest chain from the empty set to `a` in the lattice of unions of
  // circuits; `a` must be such a union.
  int lattice_height(Subset a) const;

  int index_of(std::string_view label) const;
  Subset subset_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Subset s) const;
  std::string format(Subset s) const;

  friend bool operator==(const SupportMatroid& a, const SupportMatroid& b) {
    return a.ground_ == b.ground_ && a.circuits_ == b.circuits_;
  }

 private:
  void build();
  void require_circuit(Subset c) const;

  std::vector<std::string> ground_;
  std::vector<Subset> circuits_;
  std::vector<Subset> cocircuits_;
  std::vector<std::uint8_t> rank_;
};

// Labels of `ground` restricted to `keep`, in order.
std::vector<std::string> restrict_labels(const std::vector<std::string>& ground,
                                         Subset keep);

// Members of `sets` with no proper subset also in `sets`; deduplicated and
// sorted. Empty sets are dropped.
std::vector<Subset> minimal_sets(std::vector<Subset> sets);

}  // namespace skewmat

#endif  // SKEWMAT_MATROID_H_
