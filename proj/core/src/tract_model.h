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

#ifndef SKEWMAT_SRC_TRACT_MODEL_H_
#define SKEWMAT_SRC_TRACT_MODEL_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "skewmat/tract.h"

namespace skewmat::detail {

// Payload-level behaviour of one tract. Payloads are validated by `Tract`
// before they reach a model.
class TractModel {
 public:
  virtual ~TractModel() = default;

  std::uint32_t id = 0;
  std::string name;

  virtual TractKind kind() const = 0;
  virtual TractDescriptor descriptor() const = 0;
  virtual bool commutative() const = 0;
  virtual bool valid(const Rational& x) const = 0;
  virtual Rational one() const = 0;
  virtual Rational epsilon() const = 0;
  virtual Rational mul(const Rational& a, const Rational& b) const = 0;
  virtual Rational inv(const Rational& a) const = 0;
  virtual Rational conj(const Rational& a) const { return a; }
  virtual bool is_null(std::span<const Rational> terms) const = 0;
  virtual std::optional<std::vector<Rational>> elements() const {
    return std::nullopt;
  }
  virtual std::vector<Rational> pool() const { return *elements(); }
  virtual std::string zero_text() const { return "0"; }
  virtual Rational parse(std::string_view text) const {
    return parse_rational(text);
  }
  virtual std::string format(const Rational& x) const {
    return format_rational(x);
  }
};

std::uint32_t intern_tract_key(const std::string& key);
std::uint32_t fresh_tract_id(const std::string& hint);

}  // namespace skewmat::detail

#endif  // SKEWMAT_SRC_TRACT_MODEL_H_
