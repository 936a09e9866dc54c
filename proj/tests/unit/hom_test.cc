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

#include "skewmat/tract_hom.h"

#include <gtest/gtest.h>

#include "helpers.h"
#include "skewmat/error.h"

namespace skewmat {
namespace {

using testing::el;

TEST(TractHom, ToKrasnerCollapsesEverything) {
  const Tract s = Tract::sign();
  const TractHom f = TractHom::to_krasner(s);
  EXPECT_EQ(f.apply(el(s, "-1")), Tract::krasner().one());
  EXPECT_TRUE(f.apply(TractValue::zero()).is_zero());
  EXPECT_TRUE(check_hom(f));
}

TEST(TractHom, ToKrasnerIsValidFromEveryBuiltin) {
  for (const Tract& t :
       {Tract::sign(), Tract::prime_field(3), Tract::tropical(),
        Tract::ultratriangle(), Tract::phase(), Tract::min_tract("S3")}) {
    const CheckResult r = check_hom(TractHom::to_krasner(t));
    EXPECT_TRUE(r) << t.name() << ": " << r.witness;
  }
}

TEST(TractHom, TropicalToUltratriangle) {
  const TractHom f = TractHom::tropical_to_ultratriangle();
  const Tract& u = f.target();
  EXPECT_EQ(f.apply(Tract::tropical().one()), u.one());
  EXPECT_EQ(f.apply(el(Tract::tropical(), "3")), el(u, "8"));
  EXPECT_EQ(f.apply(el(Tract::tropical(), "-2")), el(u, "1/4"));
  EXPECT_THROW(f.apply(el(Tract::tropical(), "1/2")), InvalidArgument);
}

TEST(TractHom, IdentityIsValid) {
  EXPECT_TRUE(check_hom(TractHom::identity(Tract::min_tract("S3"))));
}

TEST(TractHom, TableFromBinaryFieldToSymmetricGroup) {
  const Tract f2 = Tract::prime_field(2);
  const Tract s3 = Tract::min_tract("S3");
  const TractHom f = TractHom::from_table(f2, s3, {{f2.one(), s3.one()}});
  EXPECT_TRUE(check_hom(f));
}

TEST(TractHom, SignToGf3IsNotAHom) {
  // -1 -> 2 respects the groups, but 1 + 1 - 1 is null in sign and
  // 1 + 1 + 2 = 1 is not null in gf(3).
  const Tract s = Tract::sign();
  const Tract f3 = Tract::prime_field(3);
  EXPECT_THROW(TractHom::from_table(s, f3, {{s.one(), f3.one()},
                                            {el(s, "-1"), el(f3, "2")}}),
               InvalidArgument);
}

TEST(TractHom, NonMultiplicativeTableIsRejected) {
  const Tract f3 = Tract::prime_field(3);
  const Tract s = Tract::sign();
  EXPECT_THROW(TractHom::from_table(f3, s, {{f3.one(), el(s, "-1")},
                                            {el(f3, "2"), el(s, "-1")}}),
               InvalidArgument);
}

TEST(TractHom, Gf3ToSignIsNotNullPreserving) {
  // 1 + 1 + 1 is null in gf(3) but {1, 1, 1} is not null in sign.
  const Tract f3 = Tract::prime_field(3);
  const Tract s = Tract::sign();
  const TractHom f = TractHom::from_function(
      f3, s, "gf3->sign", [&](const GroupElement& g) {
        return g == f3.one() ? s.one() : el(s, "-1");
      });
  EXPECT_FALSE(check_hom(f));
}

TEST(TractHom, NamedLookup) {
  EXPECT_EQ(make_hom("to_krasner", Tract::sign()).target(), Tract::krasner());
  EXPECT_THROW(make_hom("tropical_to_ultratriangle", Tract::sign()),
               InvalidArgument);
  EXPECT_THROW(make_hom("nope", Tract::sign()), InvalidArgument);
}

}  // namespace
}  // namespace skewmat
