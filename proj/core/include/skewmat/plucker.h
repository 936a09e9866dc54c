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

#ifndef SKEWMAT_PLUCKER_H_
#define SKEWMAT_PLUCKER_H_

#include <map>
#include <optional>
#include <vector>

#include "skewmat/error.h"
#include "skewmat/matroid.h"
#include "skewmat/signature.h"
#include "skewmat/tract.h"

namespace skewmat {

// Quasi-Plucker coordinates: a nonzero value on every ordered pair of
// adjacent bases.
class PluckerMap {
 public:
  using Values = std::map<AdjacentBasisPair, GroupElement>;

  // Throws InvalidArgument unless `values` is defined exactly on
  // adjacent_bases(matroid) with entries from `tract`.
  PluckerMap(SupportMatroid matroid, Tract tract, Side side, Values values);

  const SupportMatroid& matroid() const { return matroid_; }
  const Tract& tract() const { return tract_; }
  Side side() const { return side_; }
  const Values& values() const { return values_; }
  // Throws InvalidArgument if (from, to) is not an adjacent pair.
  const GroupElement& at(Subset from, Subset to) const;
  bool defined(Subset from, Subset to) const;

  friend bool operator==(const PluckerMap& a, const PluckerMap& b) {
    return a.matroid_ == b.matroid_ && a.tract_ == b.tract_ &&
           a.side_ == b.side_ && a.values_ == b.values_;
  }

 private:
  SupportMatroid matroid_;
  Tract tract_;
  Side side_;
  Values values_;
};

// [Fa, Fb] = -X(a)^{-1} X(b) (order reversed on the right side), X the
// circuit with a, b in supp X contained in Fab. Throws InvalidArgument if
// the signature does not match m.
PluckerMap coords_from_signature(const Signature& sig, const SupportMatroid& m);
PluckerMap coords_from_signature(const Signature& sig);

// Inverse construction. Throws AxiomViolation if the map fails the
// coordinate axioms or the derived entries are inconsistent.
Signature signature_from_coords(const PluckerMap& pm);

// LC1-LC3.
CheckResult check_coordinates(const PluckerMap& pm);
// P1-P5.
CheckResult check_weak_qp(const PluckerMap& pm);
// P1-P3, P4', P5'.
CheckResult check_strong_qp(const PluckerMap& pm);

// [B, B']* = -conj([E - B, E - B']) on the dual matroid, side flipped.
PluckerMap dual_coords(const PluckerMap& pm);

// [B, B']/A = [B + I_A, B' + I_A]; I_A defaults to the lexicographically
// least maximal independent subset of A.
PluckerMap contract_coords(const PluckerMap& pm, Subset a);
PluckerMap contract_coords(const PluckerMap& pm, Subset a, Subset i_a);
// [B, B'] \ A = [B + J_A, B' + J_A]; J_A defaults to the lexicographically
// least subset of A with (E - A) + J_A spanning.
PluckerMap delete_coords(const PluckerMap& pm, Subset a);
PluckerMap delete_coords(const PluckerMap& pm, Subset a, Subset j_a);
// All admissible I_A (resp. J_A) for A.
std::vector<Subset> contraction_choices(const SupportMatroid& m, Subset a);
std::vector<Subset> deletion_choices(const SupportMatroid& m, Subset a);

// X(x1)^{-1} X(x2) = -[I - x2, I - x1] for all x1 != x2 in supp X, where I
// extends supp X with every I - x a basis. X must be a circuit of pm.
CheckResult pivot_check(const PluckerMap& pm, const TVector& x);
// Y(y1) Y(y2)^{-1} = conj([J y1, J y2]) for Y a circuit of the dual map.
CheckResult dual_pivot_check(const PluckerMap& pm, const TVector& y);

}  // namespace skewmat

#endif  // SKEWMAT_PLUCKER_H_
