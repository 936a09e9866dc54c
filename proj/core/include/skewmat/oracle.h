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

#ifndef SKEWMAT_ORACLE_H_
#define SKEWMAT_ORACLE_H_

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "skewmat/dual_pair.h"
#include "skewmat/matroid.h"
#include "skewmat/signature.h"
#include "skewmat/tract.h"

namespace skewmat {

// 0 in the iterated hypersum of `s`, evaluated from the set-valued
// hyperaddition tables (krasner, sign, gf(p), tropical, ultratriangle,
// phase). Throws InvalidArgument for other tracts.
bool hyperaddition_eval(const Tract& t, const FormalSum& s);

using BigRational = boost::multiprecision::cpp_rational;

struct Gaussian {
  BigRational re;
  BigRational im;

  friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

// "3", "-1/2", "2i", "1+i", "1/2-3/4i".
Gaussian parse_gaussian(std::string_view text);
std::string format_gaussian(const Gaussian& z);

enum class Field {
  kPrime,       // GF(p)
  kRationals,
  kValued,      // rationals with the p-adic valuation
  kGaussian,    // Q(i)
};

struct Realization {
  Field field = Field::kRationals;
  // Modulus for kPrime, valuation prime for kValued.
  int prime = 0;
  // r x n, full row rank.
  std::vector<std::vector<Gaussian>> matrix;

  int rows() const { return static_cast<int>(matrix.size()); }
  int cols() const { return matrix.empty() ? 0 : static_cast<int>(matrix[0].size()); }

  static Realization over_rationals(
      const std::vector<std::vector<BigRational>>& m);
  static Realization over_prime_field(
      int p, const std::vector<std::vector<std::int64_t>>& m);
  static Realization over_valued(int p,
                                 const std::vector<std::vector<BigRational>>& m);
  static Realization over_gaussian(
      const std::vector<std::vector<Gaussian>>& m);
};

int realization_rank(const Realization& real);
// Column matroid; throws InvalidArgument on rank deficiency.
SupportMatroid realization_matroid(const Realization& real);
// One kernel vector per circuit, supported exactly on the circuit.
std::vector<std::vector<Gaussian>> circuit_kernel_vectors(
    const Realization& real);

// Image of a field element in `target`: gf(p) -> gf(p); rationals -> sign;
// valued -> tropical (-v_p) or ultratriangle (|x|_p); gaussian -> phase
// (arguments that are multiples of 1/8 turn only); anything -> krasner.
TractValue push_value(const Realization& real, const Gaussian& x,
                      const Tract& target);

// Left signature of the column matroid with the given labels (default
// "1".."n").
Signature realization_to_signature(const Realization& real,
                                   const Tract& target,
                                   std::vector<std::string> labels = {});

// Calls fn on every vector of T^E over a finite tract. Throws CapExceeded
// when |T|^n exceeds `cap`.
void enumerate_vectors(const Tract& t, int n,
                       const std::function<void(const TVector&)>& fn,
                       std::uint64_t cap = kDefaultEnumerationCap);

// Nonzero vectors whose support does not properly contain the support of
// another nonzero vector.
std::vector<TVector> minimal_support(const std::vector<TVector>& vs);

}  // namespace skewmat

#endif  // SKEWMAT_ORACLE_H_
