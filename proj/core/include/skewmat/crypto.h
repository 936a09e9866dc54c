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

#ifndef SKEWMAT_CRYPTO_H_
#define SKEWMAT_CRYPTO_H_

#include <optional>
#include <string>
#include <vector>

#include "skewmat/dual_pair.h"
#include "skewmat/matroid.h"
#include "skewmat/plucker.h"
#include "skewmat/signature.h"

namespace skewmat {

enum class Strength { kInvalid, kWeak, kStrong };
const char* strength_name(Strength s);

// One matroid in all three presentations.
struct TMatroid {
  Signature signature;
  PluckerMap coords;
  Signature cocircuits;
  SupportMatroid matroid;
  Strength strength = Strength::kWeak;

  DualPair dual_pair() const { return {signature, cocircuits, matroid}; }
};

// Builds the other two presentations from a signature that is already
// known to be a T-matroid of the given strength. Throws AxiomViolation if
// the conversions do not close.
TMatroid make_tmatroid(const Signature& sig, Strength strength);

struct Classification {
  Strength strength = Strength::kInvalid;
  std::optional<TMatroid> matroid;
  // Why the strong (and, for invalid, the weak) check failed.
  std::string witness;
};

// Strong checker first, weak second.
Classification classify(const Signature& sig);
Classification classify(const PluckerMap& pm);
Classification classify(const DualPair& dp);

struct RoundtripReport {
  bool ok = true;
  std::vector<std::string> passed;
  std::vector<std::string> failures;
};

// The six conversion cycles between signature, coordinates and dual pair,
// the duality properties, minor/duality exchange on singletons, and
// strength preservation.
RoundtripReport roundtrip_report(const TMatroid& tm);

}  // namespace skewmat

#endif  // SKEWMAT_CRYPTO_H_
