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

#ifndef SKEWMAT_TRACT_HOM_H_
#define SKEWMAT_TRACT_HOM_H_

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "skewmat/error.h"
#include "skewmat/tract.h"

namespace skewmat {

class TractHom {
 public:
  using Map = std::function<GroupElement(const GroupElement&)>;

  // Sends every nonzero element to 1.
  static TractHom to_krasner(const Tract& source);
  static TractHom identity(const Tract& t);
  // a -> 2^a. Defined on integer tropical values only; apply() throws
  // InvalidArgument on a non-integer exponent.
  static TractHom tropical_to_ultratriangle();
  // Explicit element table over a finite source. Throws InvalidArgument if
  // the table is not total, not a group homomorphism, or fails null
  // preservation on sums of length <= 3.
  static TractHom from_table(
      const Tract& source, const Tract& target,
      const std::vector<std::pair<GroupElement, GroupElement>>& table);
  // Unchecked; see check_hom.
  static TractHom from_function(const Tract& source, const Tract& target,
                                std::string name, Map map);

  const Tract& source() const { return source_; }
  const Tract& target() const { return target_; }
  const std::string& name() const { return name_; }

  GroupElement apply(const GroupElement& g) const;
  TractValue apply(const TractValue& v) const;
  FormalSum apply(const FormalSum& s) const;

 private:
  TractHom(Tract source, Tract target, std::string name, Map map)
      : source_(std::move(source)),
        target_(std::move(target)),
        name_(std::move(name)),
        map_(std::move(map)) {}

  Tract source_;
  Tract target_;
  std::string name_;
  Map map_;
};

// Group homomorphism on all pairs of the source pool and null preservation
// on sums up to options.max_length (exhaustive for finite sources, sampled
// otherwise).
CheckResult check_hom(const TractHom& f, const AxiomCheckOptions& options = {
                                             .max_length = 3});

// "to_krasner", "identity", "tropical_to_ultratriangle".
TractHom make_hom(std::string_view name, const Tract& source);

}  // namespace skewmat

#endif  // SKEWMAT_TRACT_HOM_H_
