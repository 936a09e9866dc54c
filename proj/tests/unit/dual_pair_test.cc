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

#include <random>

#include <gtest/gtest.h>

#include "corpus.h"
#include "helpers.h"
#include "skewmat/error.h"
#include "skewmat/oracle.h"

namespace skewmat {
namespace {

using testing::sig;
using testing::vec;

// Minimal-support sign vectors of the row space, from small integer
// combinations of the rows.
Signature row_space_cocircuits(const Realization& r) {
  const Tract t = Tract::sign();
  std::vector<TVector> covectors;
  const int rows = r.rows();
  std::vector<int> coeff(rows, -4);
  while (true) {
    TVector v = TVector::zeros(r.cols());
    for (int j = 0; j < r.cols(); ++j) {
      BigRational x = 0;
      for (int i = 0; i < rows; ++i) x += coeff[i] * r.matrix[i][j].re;
      if (x != 0) v[j] = t.parse(x > 0 ? "1" : "-1");
    }
    if (!v.is_zero()) covectors.push_back(v);
    int i = 0;
    while (i < rows && coeff[i] == 4) coeff[i++] = -4;
    if (i == rows) break;
    ++coeff[i];
  }
  return Signature(t, default_labels(r.cols()), Side::kRight,
                   minimal_support(covectors));
}

TEST(DualPair, DotProduct) {
  const Tract t = Tract::sign();
  EXPECT_TRUE(is_orthogonal(t, vec(t, {"1", "1", "-1", "0"}),
                            vec(t, {"1", "-1", "0", "1"})));
  EXPECT_FALSE(is_orthogonal(t, vec(t, {"1", "1", "0"}), vec(t, {"1", "1", "0"})));
  EXPECT_TRUE(is_orthogonal(t, vec(t, {"1", "0"}), vec(t, {"0", "1"})));
  EXPECT_TRUE(dot(t, vec(t, {"1", "0"}), vec(t, {"0", "1"})).empty());
}

TEST(DualPair, ConstructiveCocircuitsMatchRowSpace) {
  for (const Realization& r :
       {testing::u23_rationals(), testing::u24_rationals(),
        testing::u35_rationals(), testing::k4_rationals()}) {
    const Signature c = realization_to_signature(r, Tract::sign());
    EXPECT_EQ(cocircuits_constructive(c), row_space_cocircuits(r));
  }
}

TEST(DualPair, RealizedPairIsStrong) {
  const Signature c = testing::oriented_u24();
  const DualPair dp{c, row_space_cocircuits(testing::u24_rationals()),
                    testing::u24()};
  EXPECT_TRUE(check_dual_pair(dp, PairMode::kStrong));
  EXPECT_TRUE(check_dual_pair(dp, PairMode::kWeak));
}

TEST(DualPair, FlippedCocircuitIsCaught) {
  const Tract t = Tract::sign();
  const Signature c = testing::oriented_u24();
  const Signature d = row_space_cocircuits(testing::u24_rationals());
  std::vector<TVector> reps = d.reps();
  const auto support = reps[0].support().elements();
  reps[0][support.back()] = t.neg(reps[0][support.back()]);
  const DualPair dp{c, Signature(t, d.ground(), Side::kRight, reps),
                    testing::u24()};
  const CheckResult r = check_dual_pair(dp, PairMode::kStrong);
  EXPECT_FALSE(r);
  EXPECT_FALSE(r.witness.empty());
}

TEST(DualPair, KrasnerCircuitsMeetCocircuitsTwice) {
  for (const SupportMatroid& m : testing::corpus_matroids()) {
    for (Subset c : m.circuits()) {
      for (Subset d : m.cocircuits()) EXPECT_NE((c & d).size(), 1);
    }
    const Signature k = krasner_signature(m);
    const Signature co = cocircuits_constructive(k);
    EXPECT_EQ(co, krasner_signature(m.dual(), Side::kRight));
    EXPECT_TRUE(check_dual_pair({k, co, m}, PairMode::kStrong));
  }
}

TEST(DualPair, OrthogonalityEnumerationMatchesConstruction) {
  for (const auto& inst : testing::corpus()) {
    if (!inst.signature.tract().finite()) continue;
    EXPECT_EQ(cocircuits_by_orthogonality(inst.signature),
              cocircuits_constructive(inst.signature))
        << inst.name;
  }
}

TEST(DualPair, FreeMatroidCocircuitsAreSingletons) {
  const Signature empty(Tract::sign(), {"1", "2", "3"}, Side::kLeft, {});
  const Signature d = cocircuits_by_orthogonality(empty);
  ASSERT_EQ(d.reps().size(), 3u);
  for (const TVector& y : d.reps()) EXPECT_EQ(y.support().size(), 1);
  EXPECT_EQ(cocircuits_constructive(empty), d);
}

TEST(DualPair, EnumerationCap) {
  EXPECT_THROW(cocircuits_by_orthogonality(testing::oriented_u24(), 10),
               CapExceeded);
  EXPECT_THROW(cocircuits_by_orthogonality(
                   realization_to_signature(testing::u24_rationals(),
                                            Tract::tropical())),
               InvalidArgument);
}

TEST(DualPair, DualOfDualIsOriginal) {
  for (const auto& inst : testing::corpus()) {
    const DualTMatroid d = dual_tmatroid(inst.signature);
    EXPECT_EQ(d.matroid, inst.signature.underlying().dual());
    EXPECT_EQ(d.matroid.rank(),
              inst.signature.size() - inst.signature.underlying().rank());
    EXPECT_EQ(d.coords, coords_from_signature(d.cocircuits, d.matroid));
    EXPECT_EQ(cocircuits_constructive(d.cocircuits), inst.signature)
        << inst.name;
    EXPECT_TRUE(check_dual_pair({inst.signature, d.cocircuits,
                                 inst.signature.underlying()},
                                PairMode::kStrong))
        << inst.name;
  }
}

TEST(DualPair, WeakPairMatchesCoordinateChain) {
  for (const auto& inst : testing::corpus()) {
    const Signature co = cocircuits_constructive(inst.signature);
    const DualPair dp{inst.signature, co, inst.signature.underlying()};
    const PluckerMap pm = coords_from_signature(inst.signature);
    EXPECT_TRUE(check_dual_pair(dp, PairMode::kWeak));
    EXPECT_TRUE(check_weak_qp(pm));
    EXPECT_EQ(signature_from_coords(dual_coords(pm)), co) << inst.name;
  }
}

TEST(DualPair, OrthogonalityIsScalingStable) {
  std::mt19937_64 rng(5);
  for (const auto& inst : testing::corpus()) {
    const Tract& t = inst.signature.tract();
    const Signature co = cocircuits_constructive(inst.signature);
    for (const TVector& x : inst.signature.reps()) {
      for (const TVector& y : co.reps()) {
        const bool base = is_orthogonal(t, x, y);
        for (int i = 0; i < 3; ++i) {
          const auto ab = t.sample(rng, 2);
          EXPECT_EQ(is_orthogonal(t, left_scale(t, ab[0], x),
                                  right_scale(t, y, ab[1])),
                    base)
              << inst.name;
        }
      }
    }
  }
}

TEST(DualPair, MinorExamples) {
  const Tract t = Tract::sign();
  const Signature s = testing::oriented_u24();
  EXPECT_EQ(minors(s, Subset(), Subset()), s);
  EXPECT_EQ(minors(s, Subset::singleton(3), Subset()).reps(),
            sig(t, 3, Side::kLeft, {{"1", "1", "-1"}}).reps());
  EXPECT_EQ(minors(s, Subset(), Subset::singleton(3)).reps(),
            sig(t, 3, Side::kLeft,
                {{"1", "1", "0"}, {"1", "0", "-1"}, {"0", "1", "1"}})
                .reps());
  EXPECT_THROW(minors(s, Subset::singleton(0), Subset::singleton(0)),
               InvalidArgument);
}

TEST(DualPair, MinorDualityExchange) {
  for (const auto& inst : testing::corpus()) {
    const Signature& s = inst.signature;
    const Signature co = cocircuits_constructive(s);
    for (std::uint32_t bits = 1; bits < (1u << s.size()); ++bits) {
      const Subset a(bits);
      if (a.size() > 2) continue;
      EXPECT_EQ(cocircuits_constructive(minors(s, a, Subset())),
                minors(co, Subset(), a))
          << inst.name;
      EXPECT_EQ(cocircuits_constructive(minors(s, Subset(), a)),
                minors(co, a, Subset()))
          << inst.name;
      EXPECT_EQ(minors(s, a, Subset()).underlying(),
                s.underlying().delete_set(a));
    }
  }
}

TEST(DualPair, VectorsContainCircuits) {
  const Signature s = testing::oriented_u24();
  const auto vs = vectors(s);
  EXPECT_NE(std::find(vs.begin(), vs.end(), TVector::zeros(4)), vs.end());
  for (const TVector& x : s.reps()) {
    EXPECT_NE(std::find(vs.begin(), vs.end(), x), vs.end());
  }
  const auto cvs = covectors(s);
  EXPECT_NE(std::find(cvs.begin(), cvs.end(), TVector::zeros(4)), cvs.end());
}

TEST(DualPair, SmallSignInstancesArePerfect) {
  for (const auto& inst : testing::corpus()) {
    const Signature& s = inst.signature;
    if (s.tract() == Tract::sign() && s.size() <= 4) {
      EXPECT_TRUE(is_perfect_instance(s)) << inst.name;
    }
  }
}

}  // namespace
}  // namespace skewmat
