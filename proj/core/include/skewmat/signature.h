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

#ifndef SKEWMAT_SIGNATURE_H_
#define SKEWMAT_SIGNATURE_H_

#include <optional>
#include <string>
#include <vector>

#include "skewmat/error.h"
#include "skewmat/matroid.h"
#include "skewmat/subset.h"
#include "skewmat/tract.h"
#include "skewmat/tract_hom.h"

namespace skewmat {

enum class Side { kLeft, kRight };

inline Side flip(Side s) { return s == Side::kLeft ? Side::kRight : Side::kLeft; }
const char* side_name(Side s);

// A vector in T^E; entries indexed by ground position.
class TVector {
 public:
  TVector() = default;
  explicit TVector(std::vector<TractValue> entries)
      : entries_(std::move(entries)) {}
  static TVector zeros(int n) {
    return TVector(std::vector<TractValue>(n));
  }

  int size() const { return static_cast<int>(entries_.size()); }
  const TractValue& operator[](int e) const { return entries_[e]; }
  TractValue& operator[](int e) { return entries_[e]; }
  const std::vector<TractValue>& entries() const { return entries_; }
  Subset support() const;
  bool is_zero() const { return support().empty(); }

  friend bool operator==(const TVector&, const TVector&) = default;
  friend bool operator<(const TVector& a, const TVector& b) {
    return a.entries_ < b.entries_;
  }

 private:
  std::vector<TractValue> entries_;
};

// g * X entrywise.
TVector left_scale(const Tract& t, const GroupElement& g, const TVector& x);
// X * g entrywise.
TVector right_scale(const Tract& t, const TVector& x, const GroupElement& g);
// The scalar action of `side`: g*X on the left, X*g on the right.
TVector scale(const Tract& t, Side side, const GroupElement& g,
              const TVector& x);
// X(a)^{-1} X(b) for the left side, X(b) X(a)^{-1} for the right side.
GroupElement ratio(const Tract& t, Side side, const TVector& x, int a, int b);
// Product in the order given for the left side, reversed for the right side.
GroupElement side_product(const Tract& t, Side side,
                          std::initializer_list<GroupElement> factors);
std::string format_vector(const Tract& t, const TVector& x);

// A set of T-circuits stored as one normalized representative per
// projective class: the entry at the least support element is 1.
class Signature {
 public:
  // Normalizes and deduplicates. Zero vectors are kept so that
  // check_signature can report them. Throws InvalidArgument on length
  // mismatch or foreign entries.
  Signature(Tract tract, std::vector<std::string> ground, Side side,
            std::vector<TVector> vectors);

  const Tract& tract() const { return tract_; }
  const std::vector<std::string>& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.size()); }
  Side side() const { return side_; }
  // Sorted by support, then entries.
  const std::vector<TVector>& reps() const { return reps_; }

  TVector normalize(const TVector& x) const;
  // True iff x is a scalar multiple (on this side) of a stored class.
  bool contains(const TVector& x) const;
  // Representatives whose support is exactly `s`.
  std::vector<TVector> with_support(Subset s) const;
  std::vector<Subset> supports() const;
  // Throws InvalidArgument if the supports are not the circuits of a
  // matroid.
  SupportMatroid underlying() const;

  friend bool operator==(const Signature& a, const Signature& b) {
    return a.tract_ == b.tract_ && a.ground_ == b.ground_ &&
           a.side_ == b.side_ && a.reps_ == b.reps_;
  }

 private:
  Tract tract_;
  std::vector<std::string> ground_;
  Side side_;
  std::vector<TVector> reps_;
};

// C1, C3, and supports equal to the circuits of `m` (or of the matroid
// formed by the supports when `m` is absent).
CheckResult check_signature(const Signature& sig);
CheckResult check_signature(const Signature& sig, const SupportMatroid& m);

struct EliminationOptions {
  // Largest number of circuits eliminated against X; 0 means |E|.
  int max_family = 0;
};

// Modular elimination over modular pairs.
CheckResult check_weak_circuits(const Signature& sig);
// Strong modular elimination over modular families of size up to
// options.max_family + 1.
CheckResult check_strong_circuits(const Signature& sig,
                                  const EliminationOptions& options = {});

// Searches for Z with Z(e_i) = 0 and X(f) + sum X_i(f) - Z(f) null for all
// f, given already scaled X and X_i.
std::optional<TVector> find_eliminator(const Signature& sig, const TVector& x,
                                       const std::vector<TVector>& others,
                                       const std::vector<int>& eliminated);

enum class RescaleMode { kLeft, kRight };

// Right mode: X -> X * rho^{-1}; left mode: X -> rho^{-1} * X. On a
// noncommutative tract the mode must act on the side opposite to the
// signature's scalar action; otherwise InvalidArgument.
Signature rescale(const Signature& sig, const std::vector<GroupElement>& rho,
                  RescaleMode mode);
Signature pushforward(const TractHom& f, const Signature& sig);

// The Krasner signature of m: every circuit with all entries 1.
Signature krasner_signature(const SupportMatroid& m, Side side = Side::kLeft);

}  // namespace skewmat

#endif  // SKEWMAT_SIGNATURE_H_
