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

#ifndef SKEWMAT_SUBSET_H_
#define SKEWMAT_SUBSET_H_

#include <bit>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace skewmat {

// Largest ground set the library handles. Matroid rank tables are
// precomputed over all 2^n subsets.
inline constexpr int kMaxGroundSize = 16;

// A subset of a ground set {0, ..., n-1}, stored as a bit mask.
//
// Ordering is lexicographic on the sorted element sequences, so that
// {0,1} < {0,2} < {1}; containers of subsets therefore iterate in the same
// order the labels would sort.
class Subset {
 public:
  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

  static constexpr Subset singleton(int e) { return Subset(1u << e); }
  static constexpr Subset full(int n) {
    return Subset(n >= 32 ? ~0u : ((1u << n) - 1u));
  }
  static Subset of(std::initializer_list<int> elements) {
    Subset s;
    for (int e : elements) s = s.with(e);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1u; }
  constexpr bool is_subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(Subset other) const {
    return (bits_ & other.bits_) != 0;
  }
  // Smallest element; the subset must be nonempty.
  constexpr int min() const {
    assert(bits_ != 0);
    return std::countr_zero(bits_);
  }

  constexpr Subset with(int e) const { return Subset(bits_ | (1u << e)); }
  constexpr Subset without(int e) const { return Subset(bits_ & ~(1u << e)); }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(std::countr_zero(b));
    }
    return out;
  }

  friend constexpr Subset operator|(Subset a, Subset b) {
    return Subset(a.bits_ | b.bits_);
  }
  friend constexpr Subset operator&(Subset a, Subset b) {
    return Subset(a.bits_ & b.bits_);
  }
  friend constexpr Subset operator-(Subset a, Subset b) {
    return Subset(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(Subset a, Subset b) = default;

  friend bool operator<(Subset a, Subset b) {
    std::uint32_t x = a.bits_;
    std::uint32_t y = b.bits_;
    while (x != 0 && y != 0) {
      int ex = std::countr_zero(x);
      int ey = std::countr_zero(y);
      if (ex != ey) return ex < ey;
      x &= x - 1;
      y &= y - 1;
    }
    return x == 0 && y != 0;
  }

 private:
  std::uint32_t bits_ = 0;
};

// Re-indexes `s` onto the elements of `keep`: the i-th smallest element of
// `keep` becomes element i. Elements of `s` outside `keep` are dropped.
inline Subset compress(Subset s, Subset keep) {
  Subset out;
  int j = 0;
  for (int e : keep.elements()) {
    if (s.contains(e)) out = out.with(j);
    ++j;
  }
  return out;
}

// Inverse of `compress`.
inline Subset expand(Subset s, Subset keep) {
  Subset out;
  int j = 0;
  for (int e : keep.elements()) {
    if (s.contains(j)) out = out.with(e);
    ++j;
  }
  return out;
}

// Calls `fn(Subset)` for every subset of `universe` with exactly `k`
// elements, in increasing bit-mask order.
template <typename Fn>
void for_each_subset_of_size(Subset universe, int k, Fn&& fn) {
  const std::vector<int> elems = universe.elements();
  const int n = static_cast<int>(elems.size());
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Subset s;
    for (int i : idx) s = s.with(elems[i]);
    fn(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace skewmat

#endif  // SKEWMAT_SUBSET_H_
