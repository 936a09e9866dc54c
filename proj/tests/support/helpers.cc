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

#include "helpers.h"

#include "skewmat/matroid.h"

namespace skewmat::testing {

GroupElement el(const Tract& t, const std::string& text) {
  return t.parse(text).element();
}

TVector vec(const Tract& t, std::initializer_list<const char*> entries) {
  std::vector<TractValue> out;
  for (const char* e : entries) out.push_back(t.parse(e));
  return TVector(std::move(out));
}

FormalSum sum(const Tract& t, std::initializer_list<const char*> terms) {
  FormalSum out;
  for (const char* e : terms) out.add(t.parse(e));
  return out;
}

Signature sig(const Tract& t, int n, Side side,
              std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<TVector> vs;
  for (auto row : rows) vs.push_back(vec(t, row));
  return Signature(t, default_labels(n), side, std::move(vs));
}

Signature relabel(const Signature& s, const std::vector<int>& perm) {
  std::vector<TVector> out;
  for (const TVector& x : s.reps()) {
    TVector y = TVector::zeros(s.size());
    for (int e = 0; e < s.size(); ++e) y[perm[e]] = x[e];
    out.push_back(std::move(y));
  }
  return Signature(s.tract(), s.ground(), s.side(), std::move(out));
}

std::optional<Signature> corrupt(const Signature& s) {
  const Tract& t = s.tract();
  if (s.reps().empty()) return std::nullopt;
  GroupElement shift = t.one();
  for (const GroupElement& g : t.sample_pool()) {
    if (!(g == t.one())) {
      shift = g;
      break;
    }
  }
  if (shift == t.one()) return std::nullopt;
  std::vector<TVector> reps = s.reps();
  const int f = reps[0].support().elements().back();
  reps[0][f] = t.mul(reps[0][f], TractValue(shift));
  return Signature(t, s.ground(), s.side(), std::move(reps));
}

std::vector<Signature> sign_signatures_on_u24() {
  const Tract t = Tract::sign();
  const SupportMatroid m = SupportMatroid::uniform(2, 4);
  std::vector<Signature> out;
  for (int code = 0; code < 256; ++code) {
    std::vector<TVector> reps;
    int rest = code;
    for (Subset c : m.circuits()) {
      TVector x = TVector::zeros(4);
      const auto elems = c.elements();
      x[elems[0]] = t.one();
      for (std::size_t j = 1; j < elems.size(); ++j) {
        x[elems[j]] = (rest & 1) ? t.epsilon() : t.one();
        rest >>= 1;
      }
      reps.push_back(std::move(x));
    }
    out.emplace_back(t, m.ground(), Side::kLeft, std::move(reps));
  }
  return out;
}

}  // namespace skewmat::testing
