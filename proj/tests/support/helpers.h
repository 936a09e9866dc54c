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

#ifndef SKEWMAT_TESTS_SUPPORT_HELPERS_H_
#define SKEWMAT_TESTS_SUPPORT_HELPERS_H_

#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "skewmat/signature.h"
#include "skewmat/tract.h"

namespace skewmat::testing {

GroupElement el(const Tract& t, const std::string& text);
TVector vec(const Tract& t, std::initializer_list<const char*> entries);
FormalSum sum(const Tract& t, std::initializer_list<const char*> terms);
Signature sig(const Tract& t, int n, Side side,
              std::initializer_list<std::initializer_list<const char*>> rows);

// Moves ground element i to position perm[i] and renames labels so that the
// ground stays sorted.
Signature relabel(const Signature& s, const std::vector<int>& perm);

// Changes the last nonzero entry of the first representative to a different
// group element. Empty when the tract has a single element.
std::optional<Signature> corrupt(const Signature& s);

// Every left sign signature with one class on each circuit of U(2,4):
// 4 circuits, 4 sign patterns each.
std::vector<Signature> sign_signatures_on_u24();

}  // namespace skewmat::testing

#endif  // SKEWMAT_TESTS_SUPPORT_HELPERS_H_
