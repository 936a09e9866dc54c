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

#include <gtest/gtest.h>

#include "corpus.h"
#include "helpers.h"
#include "skewmat/dual_pair.h"
#include "skewmat/error.h"
#include "skewmat/oracle.h"

namespace skewmat {
namespace {

using testing::el;
using testing::sig;

Signature oriented_u23() {
  return realization_to_signature(testing::u23_rationals(), Tract::sign());
}

TEST(Plucker, OrientedU23Values) {
  const Tract t = Tract::sign();
  const PluckerMap pm = coords_from_signature(oriented_u23());
  EXPECT_EQ(pm.at(Subset::of({0, 2}), Subset::of({1, 2})), el(t, "-1"));
  EXPECT_EQ(pm.at(Subset::of({0, 1}), Subset::of({0, 2})), el(t, "1"));
  EXPECT_THROW(pm.at(Subset::of({0, 1}), Subset::of({0, 1})), InvalidArgument);
  EXPECT_EQ(signature_from_coords(pm), oriented_u23());
}

TEST(Plucker, KrasnerCoordsAreAllOne) {
  const Tract k = Tract::krasner();
  for (const SupportMatroid& m : testing::corpus_matroids()) {
    const PluckerMap pm = coords_from_signature(krasner_signature(m));
    for (const auto& [pair, g] : pm.values()) EXPECT_EQ(g, k.one());
    EXPECT_TRUE(check_strong_qp(pm));
  }
  PluckerMap::Values ones;
  for (const auto& pair : testing::u24().adjacent_bases()) ones.emplace(pair, k.one());
  const PluckerMap pm(testing::u24(), k, Side::kLeft, ones);
  EXPECT_EQ(signature_from_coords(pm), krasner_signature(testing::u24()));
}

TEST(Plucker, MapMustBeTotal) {
  PluckerMap::Values partial;
  const Tract k = Tract::krasner();
  partial.emplace(testing::u24().adjacent_bases().front(), k.one());
  EXPECT_THROW(PluckerMap(testing::u24(), k, Side::kLeft, partial),
               InvalidArgument);
}

TEST(Plucker, CorpusRoundTripAndAxioms) {
  for (const auto& inst : testing::corpus()) {
    const PluckerMap pm = coords_from_signature(inst.signature);
    EXPECT_TRUE(check_coordinates(pm)) << inst.name;
    EXPECT_TRUE(check_weak_qp(pm)) << inst.name;
    const CheckResult strong = check_strong_qp(pm);
    EXPECT_TRUE(strong) << inst.name << ": " << strong.witness;
    EXPECT_EQ(signature_from_coords(pm), inst.signature) << inst.name;
    for (const auto& [pair, g] : pm.values()) {
      EXPECT_EQ(pm.tract().mul(g, pm.at(pair.to, pair.from)),
                pm.tract().one());
    }
  }
}

TEST(Plucker, NegatedValueIsCaught) {
  const Tract t = Tract::sign();
  const PluckerMap pm = coords_from_signature(testing::oriented_u24());
  PluckerMap::Values values = pm.values();
  // Negate one value together with its reverse so that P1 still holds.
  const AdjacentBasisPair p = values.begin()->first;
  values.at(p) = t.neg(values.at(p));
  values.at({p.to, p.from}) = t.neg(values.at({p.to, p.from}));
  const PluckerMap bad(pm.matroid(), t, Side::kLeft, values);
  const CheckResult r = check_coordinates(bad);
  EXPECT_FALSE(r);
  EXPECT_FALSE(r.witness.empty());
  EXPECT_FALSE(check_weak_qp(bad));
  EXPECT_THROW(signature_from_coords(bad), AxiomViolation);
}

TEST(Plucker, SingleBasisIsVacuous) {
  const SupportMatroid m = SupportMatroid::free_matroid({"1", "2"});
  const PluckerMap pm(m, Tract::sign(), Side::kLeft, {});
  EXPECT_TRUE(check_coordinates(pm));
  EXPECT_TRUE(check_strong_qp(pm));
}

TEST(Plucker, TropicalU24IsStrong) {
  const Realization r = Realization::over_valued(
      2, {{1, 1, 1, 1}, {1, 2, 4, 8}});
  const PluckerMap pm =
      coords_from_signature(realization_to_signature(r, Tract::tropical()));
  EXPECT_TRUE(check_strong_qp(pm));
}

TEST(Plucker, DualExample) {
  const PluckerMap d = dual_coords(coords_from_signature(oriented_u23()));
  EXPECT_EQ(d.side(), Side::kRight);
  EXPECT_EQ(d.at(Subset::of({1}), Subset::of({0})), Tract::sign().one());
}

TEST(Plucker, DualIsInvolutionAndKeepsStrength) {
  for (const auto& inst : testing::corpus()) {
    const PluckerMap pm = coords_from_signature(inst.signature);
    const PluckerMap d = dual_coords(pm);
    EXPECT_EQ(d.matroid(), pm.matroid().dual());
    EXPECT_EQ(dual_coords(d), pm) << inst.name;
    EXPECT_TRUE(check_strong_qp(d)) << inst.name;
  }
}

TEST(Plucker, ContractionExample) {
  const Tract t = Tract::sign();
  const PluckerMap pm = coords_from_signature(testing::oriented_u24());
  const Signature expected =
      sig(t, 3, Side::kLeft, {{"1", "1", "0"}, {"1", "0", "-1"}, {"0", "1", "1"}});
  EXPECT_EQ(contract_coords(pm, Subset::singleton(3)),
            coords_from_signature(expected));
  EXPECT_EQ(contract_coords(pm, Subset()), pm);
  EXPECT_EQ(delete_coords(pm, Subset()), pm);
}

TEST(Plucker, MinorsIgnoreTheChoiceOfExtension) {
  for (const auto& inst : testing::corpus()) {
    const PluckerMap pm = coords_from_signature(inst.signature);
    const SupportMatroid& m = pm.matroid();
    for (std::uint32_t bits = 1; bits < (1u << m.size()); ++bits) {
      const Subset a(bits);
      if (a.size() > 2) continue;
      const PluckerMap c = contract_coords(pm, a);
      for (Subset i : contraction_choices(m, a)) {
        EXPECT_EQ(contract_coords(pm, a, i), c) << inst.name;
      }
      const PluckerMap d = delete_coords(pm, a);
      for (Subset j : deletion_choices(m, a)) {
        EXPECT_EQ(delete_coords(pm, a, j), d) << inst.name;
      }
      EXPECT_EQ(dual_coords(d), contract_coords(dual_coords(pm), a))
          << inst.name;
      EXPECT_EQ(c, coords_from_signature(minors(inst.signature, Subset(), a)))
          << inst.name;
    }
  }
}

TEST(Plucker, PivotExample) {
  const Tract t = Tract::sign();
  const PluckerMap pm = coords_from_signature(oriented_u23());
  // X(1)^{-1} X(2) = 1 = -[{2,3},{1,3}].
  EXPECT_EQ(t.neg(pm.at(Subset::of({1, 2}), Subset::of({0, 2}))), t.one());
  EXPECT_TRUE(pivot_check(pm, oriented_u23().reps()[0]));
}

TEST(Plucker, PivotHoldsOnCorpus) {
  for (const auto& inst : testing::corpus()) {
    const PluckerMap pm = coords_from_signature(inst.signature);
    for (const TVector& x : inst.signature.reps()) {
      EXPECT_TRUE(pivot_check(pm, x)) << inst.name;
    }
    const Signature co = cocircuits_constructive(inst.signature);
    for (const TVector& y : co.reps()) {
      EXPECT_TRUE(dual_pivot_check(pm, y)) << inst.name;
    }
  }
}

}  // namespace
}  // namespace skewmat
