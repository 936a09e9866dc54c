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

#include "skewmat/oracle.h"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <utility>

#include "skewmat/error.h"

namespace skewmat {

namespace {

using Payload = std::optional<Rational>;  // nullopt is zero

Rational frac(const Rational& x) {
  const std::int64_t d = x.denominator();
  return Rational(((x.numerator() % d) + d) % d, d);
}

// Hypersum of two values in the finite hyperfields.
std::set<Payload> finite_add(TractKind kind, int p, const Payload& x,
                             const Payload& y) {
  if (!x) return {y};
  if (!y) return {x};
  switch (kind) {
    case TractKind::kKrasner:
      return {std::nullopt, Rational(1)};
    case TractKind::kSign:
      if (*x == *y) return {x};
      return {std::nullopt, Rational(1), Rational(-1)};
    case TractKind::kPrimeField: {
      const std::int64_t s = (x->numerator() + y->numerator()) % p;
      if (s == 0) return {std::nullopt};
      return {Rational(s)};
    }
    default:
      throw InvalidArgument("no finite hyperaddition table");
  }
}

bool finite_eval(const Tract& t, const FormalSum& s) {
  const TractKind kind = t.kind();
  const int p = t.descriptor().p;
  std::set<Payload> current{std::nullopt};
  for (const auto& g : s.terms()) {
    std::set<Payload> next;
    for (const auto& x : current) {
      for (const auto& z : finite_add(kind, p, x, g.value())) next.insert(z);
    }
    current = std::move(next);
  }
  return current.contains(std::nullopt);
}

// Tropical and ultratriangle: x + y = max(x, y) if x != y, and the downset
// {z <= x} (zero included) if x == y.
bool max_eval(const FormalSum& s) {
  std::set<Payload> points{std::nullopt};
  std::set<Rational> downsets;
  for (const auto& g : s.terms()) {
    const Rational& y = g.value();
    std::set<Payload> next_points;
    std::set<Rational> next_down;
    for (const auto& x : points) {
      if (!x) {
        next_points.insert(y);
      } else if (*x == y) {
        next_down.insert(y);
      } else {
        next_points.insert(std::max(*x, y));
      }
    }
    for (const Rational& a : downsets) {
      if (y > a) {
        next_points.insert(y);
      } else {
        next_down.insert(a);
      }
    }
    points = std::move(next_points);
    downsets = std::move(next_down);
  }
  return points.contains(std::nullopt) || !downsets.empty();
}

// Unit circle: x + y is the open short arc between x and y, {x} if x == y,
// and {0, x, -x} if y = -x. Sets are kept as a zero flag, points, and open
// arcs (start, length) with length at most half a turn.
struct PhaseSet {
  bool zero = false;
  std::set<Rational> points;
  std::set<std::pair<Rational, Rational>> arcs;
};

void phase_add_point(const Rational& p, const Rational& y, PhaseSet& out) {
  const Rational half(1, 2);
  const Rational u = frac(p - y);
  if (u == 0) {
    out.points.insert(y);
  } else if (u == half) {
    out.zero = true;
    out.points.insert(y);
    out.points.insert(p);
  } else if (u < half) {
    out.arcs.insert({y, u});
  } else {
    out.arcs.insert({p, 1 - u});
  }
}

void phase_add_arc(const Rational& start, const Rational& len,
                   const Rational& y, PhaseSet& out) {
  const Rational half(1, 2);
  const Rational s = frac(start - y);
  const Rational e = s + len;
  // Relative angles in (0, 1/2): the union of the arcs (y, y+u) is (y, y+d).
  std::optional<Rational> sup;
  auto positive = [&](Rational lo, Rational hi, Rational shift) {
    if (lo < hi) sup = std::max(sup.value_or(Rational(0)), hi - shift);
  };
  positive(std::max(s, Rational(0)), std::min(e, half), 0);
  positive(std::max(s, Rational(1)), std::min(e, Rational(3, 2)), 1);
  if (sup) out.arcs.insert({y, *sup});
  // Relative angles in (1/2, 1): the union of the arcs (p, y) is (y+c, y).
  const Rational lo = std::max(s, half);
  const Rational hi = std::min(e, Rational(1));
  if (lo < hi) out.arcs.insert({frac(y + lo), 1 - lo});
  if (s < half && half < e) {
    out.zero = true;
    out.points.insert(y);
    out.points.insert(frac(y + half));
  }
  if (s < 1 && 1 < e) out.points.insert(y);
}

bool phase_eval(const FormalSum& s) {
  PhaseSet current;
  current.zero = true;
  for (const auto& g : s.terms()) {
    const Rational& y = g.value();
    PhaseSet next;
    if (current.zero) next.points.insert(y);
    for (const Rational& p : current.points) phase_add_point(p, y, next);
    for (const auto& [start, len] : current.arcs) {
      phase_add_arc(start, len, y, next);
    }
    current = std::move(next);
  }
  return current.zero;
}

}  // namespace

bool hyperaddition_eval(const Tract& t, const FormalSum& s) {
  for (const auto& g : s.terms()) {
    if (!t.contains(g)) throw InvalidArgument("element outside " + t.name());
  }
  switch (t.kind()) {
    case TractKind::kKrasner:
    case TractKind::kSign:
    case TractKind::kPrimeField:
      return finite_eval(t, s);
    case TractKind::kTropical:
    case TractKind::kUltratriangle:
      return max_eval(s);
    case TractKind::kPhase:
      return phase_eval(s);
    default:
      throw InvalidArgument("no hyperaddition table for " + t.name());
  }
}

Gaussian parse_gaussian(std::string_view text) {
  auto rational = [&](std::string_view part) -> BigRational {
    if (part.empty() || part == "+") return 1;
    if (part == "-") return -1;
    if (part.front() == '+') part.remove_prefix(1);
    try {
      const auto slash = part.find('/');
      if (slash == std::string_view::npos) {
        return BigRational(boost::multiprecision::cpp_int(std::string(part)));
      }
      const boost::multiprecision::cpp_int num(std::string(part.substr(0, slash)));
      const boost::multiprecision::cpp_int den(std::string(part.substr(slash + 1)));
      if (den <= 0) throw ParseError("bad denominator");
      return BigRational(num, den);
    } catch (const std::exception&) {
      throw ParseError("malformed field entry '" + std::string(text) + "'");
    }
  };
  if (text.empty()) throw ParseError("empty field entry");
  if (text.back() != 'i') return {rational(text), 0};
  const std::string_view body = text.substr(0, text.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != '/') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {0, rational(body)};
  return {rational(body.substr(0, split)), rational(body.substr(split))};
}

std::string format_gaussian(const Gaussian& z) {
  if (z.im == 0) return z.re.str();
  std::string im = z.im == 1 ? "" : z.im == -1 ? "-" : z.im.str();
  if (z.re == 0) return im + "i";
  if (z.im > 0) im = "+" + im;
  return z.re.str() + im + "i";
}

namespace {

using boost::multiprecision::cpp_int;

class Ops {
 public:
  Ops(Field f, int p) : f_(f), p_(p) {}

  Gaussian norm(Gaussian a) const {
    if (f_ != Field::kPrime) return a;
    if (boost::multiprecision::denominator(a.re) != 1 || a.im != 0) {
      throw InvalidArgument("GF(p) entries must be integers");
    }
    cpp_int n = boost::multiprecision::numerator(a.re) % p_;
    if (n < 0) n += p_;
    return {BigRational(n), 0};
  }
  bool zero(const Gaussian& a) const { return a.re == 0 && a.im == 0; }
  Gaussian sub(const Gaussian& a, const Gaussian& b) const {
    return norm({a.re - b.re, a.im - b.im});
  }
  Gaussian mul(const Gaussian& a, const Gaussian& b) const {
    return norm({a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re});
  }
  Gaussian neg(const Gaussian& a) const { return norm({-a.re, -a.im}); }
  Gaussian inv(const Gaussian& a) const {
    if (f_ == Field::kPrime) {
      cpp_int base = boost::multiprecision::numerator(a.re);
      cpp_int result = 1;
      for (int e = p_ - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p_;
        base = base * base % p_;
      }
      return {BigRational(result), 0};
    }
    const BigRational d = a.re * a.re + a.im * a.im;
    return {a.re / d, -a.im / d};
  }

 private:
  Field f_;
  int p_;
};

struct Reduced {
  std::vector<std::vector<Gaussian>> rows;
  std::vector<int> pivots;  // pivot column per row
};

// Reduced row echelon form of the columns `cols` of the matrix.
Reduced rref(const Realization& real, const std::vector<int>& cols) {
  const Ops ops(real.field, real.prime);
  Reduced out;
  std::vector<std::vector<Gaussian>> a;
  for (const auto& row : real.matrix) {
    std::vector<Gaussian> r;
    for (int c : cols) r.push_back(ops.norm(row[c]));
    a.push_back(std::move(r));
  }
  const int m = static_cast<int>(a.size());
  const int n = static_cast<int>(cols.size());
  int row = 0;
  for (int c = 0; c < n && row < m; ++c) {
    int piv = -1;
    for (int i = row; i < m; ++i) {
      if (!ops.zero(a[i][c])) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    const Gaussian inv = ops.inv(a[row][c]);
    for (auto& x : a[row]) x = ops.mul(x, inv);
    for (int i = 0; i < m; ++i) {
      if (i == row || ops.zero(a[i][c])) continue;
      const Gaussian f = a[i][c];
      for (int j = 0; j < n; ++j) a[i][j] = ops.sub(a[i][j], ops.mul(f, a[row][j]));
    }
    out.pivots.push_back(c);
    ++row;
  }
  a.resize(row);
  out.rows = std::move(a);
  return out;
}

void check_shape(const Realization& real) {
  if (real.matrix.empty()) throw InvalidArgument("empty realization matrix");
  for (const auto& row : real.matrix) {
    if (static_cast<int>(row.size()) != real.cols()) {
      throw InvalidArgument("ragged realization matrix");
    }
  }
  if (real.cols() > kMaxGroundSize) throw InvalidArgument("too many columns");
  if (real.field == Field::kPrime || real.field == Field::kValued) {
    int p = real.prime;
    bool prime = p >= 2;
    for (int d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (!prime) throw InvalidArgument("realization needs a prime, got " + std::to_string(p));
  }
  if (real.field != Field::kGaussian) {
    for (const auto& row : real.matrix) {
      for (const auto& x : row) {
        if (x.im != 0) throw InvalidArgument("complex entry outside Q(i)");
      }
    }
  }
}

std::vector<int> column_list(Subset s) { return s.elements(); }

int column_rank(const Realization& real, Subset s) {
  if (s.empty()) return 0;
  return static_cast<int>(rref(real, column_list(s)).pivots.size());
}

int valuation(const BigRational& x, int p) {
  int v = 0;
  cpp_int num = boost::multiprecision::numerator(x);
  cpp_int den = boost::multiprecision::denominator(x);
  if (num < 0) num = -num;
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  return v;
}

}  // namespace

Realization Realization::over_rationals(
    const std::vector<std::vector<BigRational>>& m) {
  Realization r;
  r.field = Field::kRationals;
  for (const auto& row : m) {
    auto& out = r.matrix.emplace_back();
    for (const auto& x : row) out.push_back({x, 0});
  }
  return r;
}

Realization Realization::over_prime_field(
    int p, const std::vector<std::vector<std::int64_t>>& m) {
  Realization r;
  r.field = Field::kPrime;
  r.prime = p;
  for (const auto& row : m) {
    auto& out = r.matrix.emplace_back();
    for (auto x : row) out.push_back({BigRational(x), 0});
  }
  return r;
}

Realization Realization::over_valued(
    int p, const std::vector<std::vector<BigRational>>& m) {
  Realization r = over_rationals(m);
  r.field = Field::kValued;
  r.prime = p;
  return r;
}

Realization Realization::over_gaussian(
    const std::vector<std::vector<Gaussian>>& m) {
  Realization r;
  r.field = Field::kGaussian;
  r.matrix = m;
  return r;
}

int realization_rank(const Realization& real) {
  check_shape(real);
  return column_rank(real, Subset::full(real.cols()));
}

SupportMatroid realization_matroid(const Realization& real) {
  if (realization_rank(real) != real.rows()) {
    throw InvalidArgument("realization matrix is rank deficient");
  }
  const int n = real.cols();
  std::vector<Subset> order;
  for (std::uint32_t b = 1; b < (1u << n); ++b) order.emplace_back(b);
  std::stable_sort(order.begin(), order.end(),
                   [](Subset a, Subset b) { return a.size() < b.size(); });
  std::vector<Subset> circuits;
  for (Subset s : order) {
    if (std::any_of(circuits.begin(), circuits.end(),
                    [&](Subset c) { return c.is_subset_of(s); })) {
      continue;
    }
    if (column_rank(real, s) < s.size()) circuits.push_back(s);
  }
  return SupportMatroid::from_circuits(default_labels(n), std::move(circuits));
}

std::vector<std::vector<Gaussian>> circuit_kernel_vectors(
    const Realization& real) {
  const SupportMatroid m = realization_matroid(real);
  const Ops ops(real.field, real.prime);
  std::vector<std::vector<Gaussian>> out;
  for (Subset c : m.circuits()) {
    const std::vector<int> cols = column_list(c);
    const Reduced red = rref(real, cols);
    int free_col = -1;
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
      if (std::find(red.pivots.begin(), red.pivots.end(), j) ==
          red.pivots.end()) {
        free_col = j;
      }
    }
    std::vector<Gaussian> x(real.cols(), Gaussian{0, 0});
    x[cols[free_col]] = ops.norm({1, 0});
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
      x[cols[red.pivots[i]]] = ops.neg(red.rows[i][free_col]);
    }
    out.push_back(std::move(x));
  }
  return out;
}

TractValue push_value(const Realization& real, const Gaussian& x,
                      const Tract& target) {
  if (x.re == 0 && x.im == 0) return TractValue::zero();
  const TractKind kind = target.kind();
  if (kind == TractKind::kKrasner) return target.one();
  switch (real.field) {
    case Field::kPrime:
      if (kind == TractKind::kPrimeField && target.descriptor().p == real.prime) {
        const Ops ops(real.field, real.prime);
        const BigRational r = ops.norm(x).re;
        return target.element(
            Rational(static_cast<std::int64_t>(boost::multiprecision::numerator(r))));
      }
      break;
    case Field::kRationals:
      if (kind == TractKind::kSign) return target.element(x.re > 0 ? 1 : -1);
      if (kind == TractKind::kPhase) {
        return target.element(x.re > 0 ? Rational(0) : Rational(1, 2));
      }
      break;
    case Field::kValued: {
      const int v = valuation(x.re, real.prime);
      if (kind == TractKind::kTropical) return target.element(Rational(-v));
      if (kind == TractKind::kUltratriangle) {
        if (v > 40 || v < -40) throw InvalidArgument("valuation out of range");
        std::int64_t pw = 1;
        for (int i = 0; i < std::abs(v); ++i) pw *= real.prime;
        return target.element(v > 0 ? Rational(1, pw) : Rational(pw));
      }
      if (kind == TractKind::kSign) return target.element(x.re > 0 ? 1 : -1);
      break;
    }
    case Field::kGaussian:
      if (kind == TractKind::kPhase) {
        const int sr = x.re > 0 ? 1 : x.re < 0 ? -1 : 0;
        const int si = x.im > 0 ? 1 : x.im < 0 ? -1 : 0;
        Rational angle;
        if (si == 0) {
          angle = sr > 0 ? Rational(0) : Rational(1, 2);
        } else if (sr == 0) {
          angle = si > 0 ? Rational(1, 4) : Rational(3, 4);
        } else if (abs(x.re) == abs(x.im)) {
          angle = sr > 0 ? (si > 0 ? Rational(1, 8) : Rational(7, 8))
                         : (si > 0 ? Rational(3, 8) : Rational(5, 8));
        } else {
          throw InvalidArgument("argument of " + format_gaussian(x) +
                                " is not a multiple of 1/8 turn");
        }
        return target.element(angle);
      }
      break;
  }
  throw InvalidArgument("no push map from this field to " + target.name());
}

Signature realization_to_signature(const Realization& real,
                                   const Tract& target,
                                   std::vector<std::string> labels) {
  if (labels.empty()) labels = default_labels(real.cols());
  if (static_cast<int>(labels.size()) != real.cols()) {
    throw InvalidArgument("label count does not match the column count");
  }
  std::vector<TVector> vs;
  for (const auto& k : circuit_kernel_vectors(real)) {
    std::vector<TractValue> entries;
    for (const auto& x : k) entries.push_back(push_value(real, x, target));
    vs.emplace_back(std::move(entries));
  }
  return Signature(target, std::move(labels), Side::kLeft, std::move(vs));
}

void enumerate_vectors(const Tract& t, int n,
                       const std::function<void(const TVector&)>& fn,
                       std::uint64_t cap) {
  std::vector<TractValue> values{TractValue::zero()};
  for (const auto& g : t.elements()) values.emplace_back(g);
  if (std::pow(static_cast<double>(values.size()), n) >
      static_cast<double>(cap)) {
    throw CapExceeded("|T|^n exceeds the enumeration cap");
  }
  std::vector<std::size_t> pos(n, 0);
  TVector v = TVector::zeros(n);
  while (true) {
    fn(v);
    int e = n - 1;
    while (e >= 0 && pos[e] + 1 == values.size()) {
      pos[e] = 0;
      v[e] = values[0];
      --e;
    }
    if (e < 0) return;
    v[e] = values[++pos[e]];
  }
}

std::vector<TVector> minimal_support(const std::vector<TVector>& vs) {
  std::vector<TVector> out;
  for (const auto& v : vs) {
    const Subset s = v.support();
    if (s.empty()) continue;
    const bool dominated = std::any_of(vs.begin(), vs.end(), [&](const TVector& w) {
      const Subset o = w.support();
      return !o.empty() && o != s && o.is_subset_of(s);
    });
    if (!dominated) out.push_back(v);
  }
  return out;
}

}  // namespace skewmat
