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

#include "phase_oracle.h"

#include <cmath>
#include <numbers>

namespace skewmat::testing {

namespace {

struct P {
  double x;
  double y;
};

double cross(P a, P b) { return a.x * b.y - a.y * b.x; }
double dot(P a, P b) { return a.x * b.x + a.y * b.y; }

bool in_cone(P target, const std::vector<P>& gens, double tol) {
  for (const P& g : gens) {
    if (std::abs(cross(g, target)) <= tol && dot(g, target) > 0) return true;
  }
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t k = j + 1; k < gens.size(); ++k) {
      const double det = cross(gens[j], gens[k]);
      if (std::abs(det) <= tol) continue;
      const double a = cross(target, gens[k]) / det;
      const double b = cross(gens[j], target) / det;
      if (a >= -tol && b >= -tol) return true;
    }
  }
  return false;
}

}  // namespace

bool positive_combination_vanishes(const std::vector<double>& turns,
                                   double tol) {
  std::vector<P> pts;
  for (double t : turns) {
    const double a = 2 * std::numbers::pi * t;
    pts.push_back({std::cos(a), std::sin(a)});
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<P> others;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j != i) others.push_back(pts[j]);
    }
    if (!in_cone({-pts[i].x, -pts[i].y}, others, tol)) return false;
  }
  return true;
}

}  // namespace skewmat::testing
