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

// Skew tracts: a multiplicative group G together with a set N_G of formal
// sums over G that are declared to "sum to zero". Built-in instances cover
// the Krasner, sign, phase, tropical and ultratriangle hyperfields, prime
// fields, and a minimal tract over an arbitrary finite (possibly
// noncommutative) group.
//
// All arithmetic is exact. Group elements carry the identity of the tract
// that created them; mixing elements of different tracts is an error.

#ifndef SKEWMAT_TRACT_H_
#define SKEWMAT_TRACT_H_

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

// Boost before 1.75 recurses forever on rational == integer under C++20
// rewritten comparisons. Exact-match overloads take precedence.
namespace boost {
#define SKEWMAT_RATIONAL_EQ(T)                                              \
  inline bool operator==(const rational<std::int64_t>& a, T b) {           \
    return a.denominator() == 1 && a.numerator() == b;                     \
  }                                                                        \
  inline bool operator==(T b, const rational<std::int64_t>& a) {           \
    return a.denominator() == 1 && a.numerator() == b;                     \
  }                                                                        \
  inline bool operator!=(const rational<std::int64_t>& a, T b) {           \
    return !(a.denominator() == 1 && a.numerator() == b);                  \
  }                                                                        \
  inline bool operator!=(T b, const rational<std::int64_t>& a) {           \
    return !(a.denominator() == 1 && a.numerator() == b);                  \
  }
SKEWMAT_RATIONAL_EQ(int)
SKEWMAT_RATIONAL_EQ(std::int64_t)
#undef SKEWMAT_RATIONAL_EQ
}  // namespace boost

namespace skewmat {

using Rational = boost::rational<std::int64_t>;

// Formats a rational as "a" or "a/b".
std::string format_rational(const Rational& r);
// Parses "a" or "a/b" (optional leading '-'); throws ParseError.
Rational parse_rational(std::string_view text);

// An element of the multiplicative group of one particular tract. The payload
// is interpreted by the owning tract: a sign, a residue, a turn fraction, a
// tropical value, or an index into a group table.
class GroupElement {
 public:
  GroupElement(std::uint32_t tract_id, Rational value)
      : tract_id_(tract_id), value_(value) {}

  std::uint32_t tract_id() const { return tract_id_; }
  const Rational& value() const { return value_; }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.tract_id_ == b.tract_id_ && a.value_ == b.value_;
  }
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.tract_id_ != b.tract_id_) return a.tract_id_ < b.tract_id_;
    return a.value_ < b.value_;
  }

 private:
  std::uint32_t tract_id_;
  Rational value_;
};

// Zero or a group element. Zero sorts before every nonzero value.
class TractValue {
 public:
  TractValue() = default;  // zero
  TractValue(GroupElement g) : element_(g) {}  // NOLINT: implicit by design

  static TractValue zero() { return {}; }

  bool is_zero() const { return !element_.has_value(); }
  bool nonzero() const { return element_.has_value(); }
  const GroupElement& element() const { return *element_; }

  friend bool operator==(const TractValue& a, const TractValue& b) {
    return a.element_ == b.element_;
  }
  friend bool operator<(const TractValue& a, const TractValue& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && !b.is_zero();
    return a.element() < b.element();
  }

 private:
  std::optional<GroupElement> element_;
};

// An element of the group semiring N[G]: a finite multiset of group
// elements. Equality ignores order and respects multiplicity.
class FormalSum {
 public:
  FormalSum() = default;
  FormalSum(std::initializer_list<GroupElement> terms) : terms_(terms) {}
  explicit FormalSum(std::vector<GroupElement> terms)
      : terms_(std::move(terms)) {}

  void add(const GroupElement& g) { terms_.push_back(g); }
  // Zero contributes nothing to a formal sum.
  void add(const TractValue& v) {
    if (v.nonzero()) terms_.push_back(v.element());
  }

  const std::vector<GroupElement>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  friend bool operator==(const FormalSum& a, const FormalSum& b);

 private:
  std::vector<GroupElement> terms_;
};

enum class TractKind {
  kKrasner,
  kSign,
  kPrimeField,
  kTropical,
  kUltratriangle,
  kPhase,
  kMinTract,
  kCustom,
};

// Serializable recipe for a tract. `name` is one of "krasner", "sign", "gf",
// "tropical", "ultratriangle", "phase", "min_tract".
struct TractDescriptor {
  std::string name;
  int p = 0;                              // gf
  std::string group;                      // min_tract: "S3", "C<n>", ...
  std::vector<std::vector<int>> table;    // min_tract: explicit Cayley table

  friend bool operator==(const TractDescriptor&,
                         const TractDescriptor&) = default;
};

namespace detail {
class TractModel;
}  // namespace detail

class Tract;

// Replacement null predicate for `Tract::patched`. It receives the sum with
// its terms re-tagged as elements of the base tract.
using NullPredicate = std::function<bool(const Tract& base, const FormalSum&)>;

// Handle to an immutable tract. Copies share the same model; two handles
// compare equal iff they denote the same tract identity.
class Tract {
 public:
  static Tract krasner();
  static Tract sign();
  // GF(p) for prime p; throws InvalidArgument otherwise.
  static Tract prime_field(int p);
  // (max, +) on the rationals; -inf is the zero.
  static Tract tropical();
  // (max, *) on the positive rationals; 0 is the zero.
  static Tract ultratriangle();
  // Unit circle with angles as exact turn fractions in [0, 1); involution is
  // complex conjugation.
  static Tract phase();
  // N_G = multisets in which every element has even multiplicity, epsilon=1.
  // `table[a][b]` is the index of a*b. Throws InvalidArgument if the table
  // is not a group.
  static Tract min_tract(std::vector<std::vector<int>> table);
  // Named groups: "S3" (index 0 is the identity), "C<n>" cyclic.
  static Tract min_tract(std::string_view group);
  // Same group and involution as `base`, different null set. Used to build
  // deliberately broken tracts.
  static Tract patched(const Tract& base, std::string name, NullPredicate pred);

  std::uint32_t id() const;
  const std::string& name() const;
  TractKind kind() const;
  TractDescriptor descriptor() const;
  bool commutative() const;
  bool finite() const;

  // All group elements; throws InvalidArgument for infinite tracts.
  std::vector<GroupElement> elements() const;
  // `elements()` for finite tracts, a fixed finite pool with deliberate
  // collisions (ties, antipodes) otherwise.
  std::vector<GroupElement> sample_pool() const;
  std::vector<GroupElement> sample(std::mt19937_64& rng,
                                   std::size_t count) const;

  GroupElement one() const;
  GroupElement epsilon() const;

  GroupElement mul(const GroupElement& a, const GroupElement& b) const;
  TractValue mul(const TractValue& a, const TractValue& b) const;
  GroupElement inv(const GroupElement& a) const;
  // Throws InvalidArgument on zero.
  TractValue inv(const TractValue& a) const;
  GroupElement conj(const GroupElement& a) const;
  TractValue conj(const TractValue& a) const;
  // epsilon * a
  GroupElement neg(const GroupElement& a) const;
  TractValue neg(const TractValue& a) const;

  bool is_null(const FormalSum& sum) const;

  bool contains(const GroupElement& g) const;
  // Builds an element from a raw payload; throws InvalidArgument if the
  // payload does not denote an element of this tract.
  GroupElement element(const Rational& payload) const;

  TractValue parse(std::string_view text) const;
  std::string format(const TractValue& v) const;
  std::string format(const GroupElement& g) const;

  friend bool operator==(const Tract& a, const Tract& b) {
    return a.id() == b.id();
  }

 private:
  explicit Tract(std::shared_ptr<const detail::TractModel> model);
  void require_member(const GroupElement& g) const;

  std::shared_ptr<const detail::TractModel> model_;
};

Tract make_tract(const TractDescriptor& descriptor);

struct AxiomCheckOptions {
  // Longest formal sum examined.
  std::size_t max_length = 4;
  // Random sums drawn per axiom for infinite tracts.
  std::size_t samples = 500;
  std::uint64_t seed = 0;
};

struct TractAxiomReport {
  bool passed = true;
  // Exhaustive over all sums up to `max_length` (finite G) or sampled.
  bool exhaustive = false;
  std::size_t max_length = 0;
  std::size_t samples = 0;
  bool noncommutative = false;
  // Informational: N_G also closed under right multiplication.
  bool right_action_closed = true;
  std::vector<std::string> failures;
};

TractAxiomReport check_tract_axioms(const Tract& t,
                                    const AxiomCheckOptions& options = {});

// Calls `fn(const FormalSum&)` for every multiset of size 0..max_length over
// `pool` (multisets, not sequences).
void for_each_multiset(const std::vector<GroupElement>& pool,
                       std::size_t max_length,
                       const std::function<void(const FormalSum&)>& fn);

}  // namespace skewmat

#endif  // SKEWMAT_TRACT_H_
