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

#include "skewmat/matroid.h"

#include <algorithm>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "corpus.h"
#include "lattice_oracle.h"
#include "skewmat/error.h"

namespace skewmat {
namespace {

// Edges of K4 in column order: 12 13 14 23 24 34.
const int kEdges[6][2] = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}};

bool is_cycle(Subset s) {
  if (s.empty()) return false;
  std::map<int, int> degree;
  for (int e : s.elements()) {
    ++degree[kEdges[e][0]];
    ++degree[kEdges[e][1]];
  }
  for (const auto& [v, d] : degree) {
    if (d != 2) return false;
  }
  // Connected: grow from one vertex along edges of s.
  std::set<int> seen = {degree.begin()->first};
  for (bool grew = true; grew;) {
    grew = false;
    for (int e : s.elements()) {
      const bool a = seen.count(kEdges[e][0]);
      const bool b = seen.count(kEdges[e][1]);
      if (a != b) {
        seen.insert(kEdges[e][0]);
        seen.insert(kEdges[e][1]);
        grew = true;
      }
    }
  }
  return seen.size() == degree.size();
}

TEST(Matroid, UniformCounts) {
  const SupportMatroid m = SupportMatroid::uniform(2, 4);
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ(m.circuits().size(), 4u);
  EXPECT_EQ(m.bases().size(), 6u);
  EXPECT_EQ(m.cocircuits().size(), 4u);
  EXPECT_EQ(m.ground(), (std::vector<std::string>{"1", "2", "3", "4"}));
}

TEST(Matroid, AdjacentPairsMatchBruteForce) {
  for (const SupportMatroid& m :
       {SupportMatroid::uniform(2, 4), SupportMatroid::uniform(3, 5),
        testing::k4()}) {
    std::vector<AdjacentBasisPair> expected;
    for (Subset b1 : m.bases()) {
      for (Subset b2 : m.bases()) {
        if (((b1 - b2) | (b2 - b1)).size() == 2) expected.push_back({b1, b2});
      }
    }
    auto got = m.adjacent_bases();
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected);
  }
  EXPECT_EQ(SupportMatroid::uniform(2, 4).adjacent_bases().size(), 24u);
}

TEST(Matroid, K4CircuitsAreGraphCycles) {
  const SupportMatroid m = testing::k4();
  std::vector<Subset> cycles;
  for (std::uint32_t b = 1; b < 64; ++b) {
    if (is_cycle(Subset(b))) cycles.emplace_back(b);
  }
  auto got = m.circuits();
  std::sort(cycles.begin(), cycles.end());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, cycles);
  EXPECT_EQ(m.rank(), 3);
}

TEST(Matroid, RankAxioms) {
  for (const SupportMatroid& m : testing::corpus_matroids()) {
    const std::uint32_t n = 1u << m.size();
    for (std::uint32_t a = 0; a < n; ++a) {
      const Subset sa(a);
      EXPECT_LE(m.rank(sa), sa.size());
      for (int e = 0; e < m.size(); ++e) {
        const int step = m.rank(sa.with(e)) - m.rank(sa);
        EXPECT_TRUE(step == 0 || step == 1);
      }
    }
  }
}

TEST(Matroid, DualOfUniform) {
  EXPECT_EQ(SupportMatroid::uniform(2, 4).dual(), SupportMatroid::uniform(2, 4));
  EXPECT_EQ(SupportMatroid::uniform(3, 5).dual(), SupportMatroid::uniform(2, 5));
}

TEST(Matroid, DualityIdentities) {
  for (const SupportMatroid& m : testing::corpus_matroids()) {
    const SupportMatroid d = m.dual();
    EXPECT_EQ(d.dual(), m);
    EXPECT_EQ(d.rank(), m.size() - m.rank());
    EXPECT_EQ(d.circuits(), m.cocircuits());
    for (Subset b : m.bases()) EXPECT_TRUE(d.is_basis(m.full() - b));
  }
}

TEST(Matroid, MinorsOfUniform) {
  const SupportMatroid m = SupportMatroid::uniform(2, 4);
  const SupportMatroid del = m.delete_set(Subset::singleton(0));
  const SupportMatroid con = m.contract(Subset::singleton(0));
  EXPECT_EQ(del.circuits(), SupportMatroid::uniform(2, 3).circuits());
  EXPECT_EQ(con.circuits(), SupportMatroid::uniform(1, 3).circuits());
  EXPECT_EQ(del.ground(), (std::vector<std::string>{"2", "3", "4"}));
}

TEST(Matroid, MinorDuality) {
  for (const SupportMatroid& m : testing::corpus_matroids()) {
    for (int e = 0; e < m.size(); ++e) {
      const Subset a = Subset::singleton(e);
      EXPECT_EQ(m.delete_set(a).dual(), m.dual().contract(a));
      EXPECT_EQ(m.contract(a).dual(), m.dual().delete_set(a));
    }
  }
}

TEST(Matroid, NonMatroidCircuitsAreRejected) {
  EXPECT_THROW(SupportMatroid::from_circuits(
                   {"1", "2", "3"}, {Subset::of({0, 1}), Subset::of({1, 2})}),
               InvalidArgument);
  EXPECT_THROW(SupportMatroid::from_circuits(
                   {"1", "2", "3"}, {Subset::of({0, 1}), Subset::of({0, 1, 2})}),
               InvalidArgument);
}

TEST(Matroid, FundamentalCircuits) {
  const SupportMatroid m = testing::k4();
  for (Subset b : m.bases()) {
    for (int e : (m.full() - b).elements()) {
      const Subset c = m.fundamental_circuit(e, b);
      EXPECT_TRUE(m.is_circuit(c));
      EXPECT_TRUE(c.contains(e));
      EXPECT_TRUE(c.without(e).is_subset_of(b));
    }
    for (int e : b.elements()) {
      const Subset d = m.fundamental_cocircuit(e, b);
      EXPECT_TRUE(m.dual().is_circuit(d));
      EXPECT_TRUE(d.contains(e));
    }
  }
}

TEST(Matroid, ModularPairsInUniform) {
  const SupportMatroid m = SupportMatroid::uniform(2, 4);
  // Two 3-subsets of a 4-set: union of rank 2 and size 4, nullity 2.
  EXPECT_TRUE(m.is_modular_pair(Subset::of({0, 1, 2}), Subset::of({0, 1, 3})));
  const SupportMatroid u = SupportMatroid::uniform(2, 5);
  EXPECT_FALSE(u.is_modular_pair(Subset::of({0, 1, 2}), Subset::of({0, 3, 4})));
}

TEST(Matroid, NullityEqualsLatticeHeight) {
  for (const SupportMatroid& m : testing::corpus_matroids()) {
    const auto heights = testing::lattice_heights(m.circuits());
    for (const auto& [bits, h] : heights) {
      EXPECT_EQ(m.nullity(Subset(bits)), h);
      EXPECT_EQ(m.lattice_height(Subset(bits)), h);
    }
  }
}

TEST(Matroid, Labels) {
  EXPECT_EQ(default_labels(3), (std::vector<std::string>{"1", "2", "3"}));
  EXPECT_EQ(default_labels(10).front(), "e01");
  const SupportMatroid m = SupportMatroid::uniform(2, 4);
  EXPECT_EQ(m.subset_of({"2", "4"}), Subset::of({1, 3}));
  EXPECT_EQ(m.labels_of(Subset::of({0, 2})),
            (std::vector<std::string>{"1", "3"}));
  EXPECT_THROW(m.subset_of({"9"}), InvalidArgument);
}

}  // namespace
}  // namespace skewmat
