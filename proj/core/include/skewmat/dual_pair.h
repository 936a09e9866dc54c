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

#ifndef SKEWMAT_DUAL_PAIR_H_
#define SKEWMAT_DUAL_PAIR_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "skewmat/error.h"
#include "skewmat/matroid.h"
#include "skewmat/plucker.h"
#include "skewmat/signature.h"

namespace skewmat {

// Circuits of a matroid and cocircuits (circuits of its dual) on the
// opposite side.
struct DualPair {
  Signature circuits;
  Signature cocircuits;
  SupportMatroid matroid;
};

enum class PairMode { kStrong, kWeak };

// sum over e of X(e) * conj(Y(e)), X on the left side, Y on the right side.
FormalSum dot(const Tract& t, const TVector& x, const TVector& y);
bool is_orthogonal(const Tract& t, const TVector& x, const TVector& y);

// Strong: every circuit is orthogonal to every cocircuit. Weak: only pairs
// meeting in at most three elements.
CheckResult check_dual_pair(const DualPair& dp, PairMode mode);

// Cocircuit classes determined by the circuit signature: for each cocircuit
// D, W(min D) = 1 and W(e) W(f)^{-1} = -conj(X(e)^{-1} X(f)) for the circuit
// X in A + e + f, A a maximal independent subset of E - D.
Signature cocircuits_constructive(const Signature& sig);

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

// Minimal-support nonzero vectors orthogonal to every circuit, by full
// enumeration of T^E. Finite tracts only.
Signature cocircuits_by_orthogonality(
    const Signature& sig, std::uint64_t cap = kDefaultEnumerationCap);

struct DualTMatroid {
  Signature cocircuits;
  PluckerMap coords;
  SupportMatroid matroid;
};

// Throws AxiomViolation if the dual coordinates disagree with the
// coordinates of the cocircuit signature.
DualTMatroid dual_tmatroid(const Signature& sig);

// Deletes `del` then contracts `con`; the result lives on E - del - con.
Signature minors(const Signature& sig, Subset del, Subset con);

// Vectors and covectors by enumeration over {0} + `pool` (all of G when
// pool is empty; infinite tracts need an explicit pool).
std::vector<TVector> vectors(const Signature& sig,
                             const std::vector<GroupElement>& pool = {});
std::vector<TVector> covectors(const Signature& sig,
                               const std::vector<GroupElement>& pool = {});
bool is_perfect_instance(const Signature& sig,
                         const std::vector<GroupElement>& pool = {});

}  // namespace skewmat

#endif  // SKEWMAT_DUAL_PAIR_H_
