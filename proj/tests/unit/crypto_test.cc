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

#include "skewmat/crypto.h"

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "corpus.h"
#include "helpers.h"
#include "skewmat/oracle.h"

namespace skewmat {
namespace {

using testing::sig;

TEST(Classify, OrientedU24IsStrong) {
  const Classification c = classify(testing::oriented_u24());
  EXPECT_EQ(c.strength, Strength::kStrong);
  ASSERT_TRUE(c.matroid.has_value());
  EXPECT_EQ(c.matroid->matroid, testing::u24());
  EXPECT_TRUE(c.witness.empty());
}

TEST(Classify, PhaseU24IsAtLeastWeak) {
  const Realization r = Realization::over_gaussian(
      {{{1, 0}, {0, 0}, {1, 0}, {1, 0}}, {{0, 0}, {1, 0}, {1, 0}, {0, 1}}});
  const Signature s = realization_to_signature(r, Tract::phase());
  EXPECT_TRUE(check_weak_circuits(s));
  EXPECT_EQ(classify(s).strength, Strength::kStrong);
}

TEST(Classify, NonMatroidSupportsAreInvalid) {
  const Signature s = sig(Tract::sign(), 3, Side::kLeft,
                          {{"1", "1", "0"}, {"0", "1", "1"}});
  const Classification c = classify(s);
  EXPECT_EQ(c.strength, Strength::kInvalid);
  EXPECT_FALSE(c.matroid.has_value());
  EXPECT_FALSE(c.witness.empty());
}

TEST(Classify, AllPresentationsAgree) {
  for (const auto& inst : testing::corpus()) {
    const Classification c = classify(inst.signature);
    ASSERT_EQ(c.strength, Strength::kStrong) << inst.name << ": " << c.witness;
    const TMatroid& tm = *c.matroid;
    EXPECT_EQ(classify(tm.coords).strength, Strength::kStrong) << inst.name;
    EXPECT_EQ(classify(tm.dual_pair()).strength, Strength::kStrong)
        << inst.name;
    EXPECT_EQ(classify(tm.coords).matroid->signature, inst.signature);
    EXPECT_EQ(classify(tm.dual_pair()).matroid->signature, inst.signature);
  }
}

TEST(Classify, InvariantUnderRelabeling) {
  std::mt19937_64 rng(17);
  for (const auto& inst : testing::corpus()) {
    std::vector<int> perm(inst.signature.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(classify(testing::relabel(inst.signature, perm)).strength,
              classify(inst.signature).strength)
        << inst.name;
  }
  const Signature bad = sig(Tract::sign(), 4, Side::kLeft,
                            {{"1", "1", "1", "0"}, {"1", "1", "0", "-1"},
                             {"1", "0", "-1", "1"}, {"0", "1", "1", "-1"}});
  EXPECT_EQ(classify(testing::relabel(bad, {3, 1, 0, 2})).strength,
            Strength::kInvalid);
}

TEST(Classify, InvariantUnderRescaling) {
  std::mt19937_64 rng(19);
  for (const auto& inst : testing::corpus()) {
    const Signature& s = inst.signature;
    const RescaleMode mode =
        s.side() == Side::kLeft ? RescaleMode::kRight : RescaleMode::kLeft;
    EXPECT_EQ(classify(rescale(s, s.tract().sample(rng, s.size()), mode)).strength,
              classify(s).strength)
        << inst.name;
  }
}

TEST(Roundtrip, CorpusClosesEveryCycle) {
  for (const auto& inst : testing::corpus()) {
    const Classification c = classify(inst.signature);
    ASSERT_TRUE(c.matroid.has_value()) << inst.name;
    const RoundtripReport r = roundtrip_report(*c.matroid);
    EXPECT_TRUE(r.ok) << inst.name << ": "
                      << (r.failures.empty() ? "" : r.failures.front());
    EXPECT_GE(r.passed.size(), 6u);
  }
}

TEST(Roundtrip, KrasnerMatchesClassicalCryptomorphism) {
  for (const SupportMatroid& m : testing::corpus_matroids()) {
    const TMatroid tm = *classify(krasner_signature(m)).matroid;
    EXPECT_EQ(tm.matroid, m);
    EXPECT_EQ(tm.cocircuits.supports(), m.cocircuits());
    EXPECT_EQ(tm.coords.values().size(), m.adjacent_bases().size());
  }
}

TEST(Roundtrip, DualsStayStrong) {
  for (const auto& inst : testing::corpus()) {
    const TMatroid tm = *classify(inst.signature).matroid;
    EXPECT_EQ(classify(tm.cocircuits).strength, Strength::kStrong)
        << inst.name;
  }
}

// Every right signature on the cocircuit supports of oriented U(2,4); only
// one of them forms a weak dual pair with the circuits.
TEST(DualPairUniqueness, OrientedU24) {
  const Tract t = Tract::sign();
  const Signature c = testing::oriented_u24();
  const SupportMatroid m = testing::u24();
  const auto cocircuits = m.cocircuits();
  int found = 0;
  const int per = 4;  // sign choices for the two non-leading entries
  int total = 1;
  for (std::size_t i = 0; i < cocircuits.size(); ++i) total *= per;
  for (int code = 0; code < total; ++code) {
    std::vector<TVector> reps;
    int rest = code;
    for (Subset d : cocircuits) {
      TVector y = TVector::zeros(m.size());
      const auto elems = d.elements();
      y[elems[0]] = t.one();
      for (std::size_t j = 1; j < elems.size(); ++j) {
        y[elems[j]] = (rest & 1) ? t.epsilon() : t.one();
        rest >>= 1;
      }
      reps.push_back(y);
    }
    const DualPair dp{c, Signature(t, m.ground(), Side::kRight, reps), m};
    if (check_dual_pair(dp, PairMode::kWeak)) {
      ++found;
      EXPECT_EQ(dp.cocircuits, cocircuits_constructive(c));
    }
  }
  EXPECT_EQ(found, 1);
}

}  // namespace
}  // namespace skewmat
