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

#ifndef SKEWMAT_TOOLS_INSTANCE_FILE_H_
#define SKEWMAT_TOOLS_INSTANCE_FILE_H_

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "skewmat/dual_pair.h"
#include "skewmat/oracle.h"
#include "skewmat/plucker.h"
#include "skewmat/signature.h"
#include "skewmat/tract.h"

namespace skewmat::cli {

inline constexpr int kFormatVersion = 1;

enum class Representation { kCircuits, kPlucker, kDualPair };

const char* representation_name(Representation r);
// Throws ParseError.
Representation parse_representation(std::string_view name);

// Exactly one of circuits / plucker / dualpair is set, matching `rep`.
struct InstanceFile {
  Representation rep = Representation::kCircuits;
  std::optional<Signature> circuits;
  std::optional<PluckerMap> plucker;
  std::optional<DualPair> dualpair;
  std::optional<Realization> realization;

  const Tract& tract() const;
  const std::vector<std::string>& ground() const;
  Side side() const;
};

nlohmann::json tract_to_json(const Tract& t);
Tract tract_from_json(const nlohmann::json& j);

// Throws ParseError on malformed JSON or schema violations and
// InvalidArgument on values that do not parse over the tract. Ground labels
// are sorted and vectors permuted to match; signatures are normalized.
InstanceFile parse_instance(std::string_view text);
// Canonical JSON: sorted keys, two-space indent, trailing newline.
std::string write_instance(const InstanceFile& f);

InstanceFile from_signature(const Signature& sig);
InstanceFile from_plucker(const PluckerMap& pm);
InstanceFile from_dual_pair(const DualPair& dp);

}  // namespace skewmat::cli

#endif  // SKEWMAT_TOOLS_INSTANCE_FILE_H_
