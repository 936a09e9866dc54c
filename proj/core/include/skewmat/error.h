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

#ifndef SKEWMAT_ERROR_H_
#define SKEWMAT_ERROR_H_

#include <stdexcept>
#include <string>
#include <utility>

namespace skewmat {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed value strings, descriptors and instance files.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A precondition of an operation does not hold (foreign elements, zero
// divisors, cross-tract operands, overlapping minor arguments, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// The input is well formed but violates an axiom the operation requires,
// e.g. supports that are not the circuits of a matroid.
class AxiomViolation : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed its configured cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

// Outcome of an axiom checker. `witness` is empty on success and holds a
// deterministic, human readable description of the first failure otherwise.
struct CheckResult {
  bool ok = true;
  std::string witness;

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

}  // namespace skewmat

#endif  // SKEWMAT_ERROR_H_
