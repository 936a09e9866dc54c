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

#include "skewmat/tract.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "skewmat/error.h"
#include "tract_model.h"

namespace skewmat {

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t v = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    throw ParseError("malformed number '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  const std::int64_t num = parse_int(text.substr(0, slash), text);
  const std::int64_t den = parse_int(text.substr(slash + 1), text);
  if (den <= 0) throw ParseError("bad denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

bool operator==(const FormalSum& a, const FormalSum& b) {
  if (a.size() != b.size()) return false;
  auto x = a.terms_;
  auto y = b.terms_;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

namespace detail {

namespace {
std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}
std::unordered_map<std::string, std::uint32_t>& registry() {
  static std::unordered_map<std::string, std::uint32_t> r;
  return r;
}
std::uint32_t& next_id() {
  static std::uint32_t id = 1;
  return id;
}
}  // namespace

std::uint32_t intern_tract_key(const std::string& key) {
  std::lock_guard lock(registry_mutex());
  auto [it, inserted] = registry().try_emplace(key, 0);
  if (inserted) it->second = next_id()++;
  return it->second;
}

std::uint32_t fresh_tract_id(const std::string& hint) {
  std::lock_guard lock(registry_mutex());
  const std::uint32_t id = next_id()++;
  registry().emplace(hint + "#" + std::to_string(id), id);
  return id;
}

}  // namespace detail

namespace {

using detail::TractModel;

// Fractional part in [0, 1).
Rational frac(const Rational& x) {
  const std::int64_t d = x.denominator();
  const std::int64_t m = ((x.numerator() % d) + d) % d;
  return Rational(m, d);
}

TractDescriptor named(std::string name) {
  TractDescriptor d;
  d.name = std::move(name);
  return d;
}

bool max_attained_twice(std::span<const Rational> terms) {
  if (terms.empty()) return true;
  const Rational m = *std::max_element(terms.begin(), terms.end());
  return std::count(terms.begin(), terms.end(), m) >= 2;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

class KrasnerModel final : public TractModel {
 public:
  TractKind kind() const override { return TractKind::kKrasner; }
  TractDescriptor descriptor() const override { return named("krasner"); }
  bool commutative() const override { return true; }
  bool valid(const Rational& x) const override { return x == Rational(1); }
  Rational one() const override { return 1; }
  Rational epsilon() const override { return 1; }
  Rational mul(const Rational&, const Rational&) const override { return 1; }
  Rational inv(const Rational&) const override { return 1; }
  bool is_null(std::span<const Rational> terms) const override {
    return terms.size() != 1;
  }
  std::optional<std::vector<Rational>> elements() const override {
    return std::vector<Rational>{1};
  }
};

class SignModel final : public TractModel {
 public:
  TractKind kind() const override { return TractKind::kSign; }
  TractDescriptor descriptor() const override { return named("sign"); }
  bool commutative() const override { return true; }
  bool valid(const Rational& x) const override { return x == Rational(1) || x == Rational(-1); }
  Rational one() const override { return 1; }
  Rational epsilon() const override { return -1; }
  Rational mul(const Rational& a, const Rational& b) const override {
    return a * b;
  }
  Rational inv(const Rational& a) const override { return a; }
  bool is_null(std::span<const Rational> terms) const override {
    if (terms.empty()) return true;
    const bool pos = std::find(terms.begin(), terms.end(), 1) != terms.end();
    const bool neg = std::find(terms.begin(), terms.end(), -1) != terms.end();
    return pos && neg;
  }
  std::optional<std::vector<Rational>> elements() const override {
    return std::vector<Rational>{-1, 1};
  }
};

class PrimeFieldModel final : public TractModel {
 public:
  explicit PrimeFieldModel(int p) : p_(p) {}
  TractKind kind() const override { return TractKind::kPrimeField; }
  TractDescriptor descriptor() const override {
    TractDescriptor d = named("gf");
    d.p = p_;
    return d;
  }
  bool commutative() const override { return true; }
  bool valid(const Rational& x) const override {
    return x.denominator() == 1 && x.numerator() >= 1 && x.numerator() < p_;
  }
  Rational one() const override { return 1; }
  Rational epsilon() const override { return p_ - 1; }
  Rational mul(const Rational& a, const Rational& b) const override {
    return (a.numerator() * b.numerator()) % p_;
  }
  Rational inv(const Rational& a) const override {
    // a^(p-2) mod p
    std::int64_t result = 1;
    std::int64_t base = a.numerator();
    for (std::int64_t e = p_ - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
    }
    return result;
  }
  bool is_null(std::span<const Rational> terms) const override {
    std::int64_t sum = 0;
    for (const Rational& t : terms) sum = (sum + t.numerator()) % p_;
    return sum == 0;
  }
  std::optional<std::vector<Rational>> elements() const override {
    std::vector<Rational> out;
    for (int i = 1; i < p_; ++i) out.emplace_back(i);
    return out;
  }
  Rational parse(std::string_view text) const override {
    const Rational r = parse_rational(text);
    if (r.denominator() != 1) {
      throw ParseError("gf value must be an integer residue");
    }
    return r;
  }

 private:
  int p_;
};

class TropicalModel final : public TractModel {
 public:
  TractKind kind() const override { return TractKind::kTropical; }
  TractDescriptor descriptor() const override { return named("tropical"); }
  bool commutative() const override { return true; }
  bool valid(const Rational&) const override { return true; }
  Rational one() const override { return 0; }
  Rational epsilon() const override { return 0; }
  Rational mul(const Rational& a, const Rational& b) const override {
    return a + b;
  }
  Rational inv(const Rational& a) const override { return -a; }
  bool is_null(std::span<const Rational> terms) const override {
    return max_attained_twice(terms);
  }
  std::vector<Rational> pool() const override {
    return {Rational(-2), Rational(-1), Rational(-1, 2), Rational(0),
            Rational(1, 2), Rational(1), Rational(2), Rational(3)};
  }
  std::string zero_text() const override { return "-inf"; }
};

class UltratriangleModel final : public TractModel {
 public:
  TractKind kind() const override { return TractKind::kUltratriangle; }
  TractDescriptor descriptor() const override { return named("ultratriangle"); }
  bool commutative() const override { return true; }
  bool valid(const Rational& x) const override { return x > 0; }
  Rational one() const override { return 1; }
  Rational epsilon() const override { return 1; }
  Rational mul(const Rational& a, const Rational& b) const override {
    return a * b;
  }
  Rational inv(const Rational& a) const override { return 1 / a; }
  bool is_null(std::span<const Rational> terms) const override {
    return max_attained_twice(terms);
  }
  std::vector<Rational> pool() const override {
    return {Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1),
            Rational(2),    Rational(3),    Rational(4)};
  }
};

class PhaseModel final : public TractModel {
 public:
  TractKind kind() const override { return TractKind::kPhase; }
  TractDescriptor descriptor() const override { return named("phase"); }
  bool commutative() const override { return true; }
  bool valid(const Rational& x) const override { return x >= 0 && x < 1; }
  Rational one() const override { return 0; }
  Rational epsilon() const override { return Rational(1, 2); }
  Rational mul(const Rational& a, const Rational& b) const override {
    return frac(a + b);
  }
  Rational inv(const Rational& a) const override { return frac(-a); }
  Rational conj(const Rational& a) const override { return frac(-a); }

  // Null iff some strictly positive combination of the unit vectors
  // vanishes: either the directions are not contained in any closed
  // half-plane (every cyclic gap is below half a turn), or they are exactly
  // one antipodal pair.
  bool is_null(std::span<const Rational> terms) const override {
    if (terms.empty()) return true;
    std::vector<Rational> angles(terms.begin(), terms.end());
    std::sort(angles.begin(), angles.end());
    angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
    if (angles.size() == 1) return false;
    const Rational half(1, 2);
    if (angles.size() == 2) return angles[1] - angles[0] == half;
    Rational max_gap = angles.front() + 1 - angles.back();
    for (std::size_t i = 1; i < angles.size(); ++i) {
      max_gap = std::max(max_gap, angles[i] - angles[i - 1]);
    }
    return max_gap < half;
  }
  std::vector<Rational> pool() const override {
    return {Rational(0),    Rational(1, 12), Rational(1, 8), Rational(1, 6),
            Rational(1, 4), Rational(1, 3),  Rational(3, 8), Rational(1, 2),
            Rational(7, 12), Rational(5, 8), Rational(2, 3), Rational(3, 4),
            Rational(5, 6), Rational(7, 8)};
  }
  Rational parse(std::string_view text) const override {
    return parse_rational(text);
  }
  // Always "p/q" so that the identity angle ("0/1") is distinct from zero.
  std::string format(const Rational& x) const override {
    return std::to_string(x.numerator()) + "/" +
           std::to_string(x.denominator());
  }
};

class MinTractModel final : public TractModel {
 public:
  MinTractModel(std::vector<std::vector<int>> table, std::string group)
      : table_(std::move(table)), group_(std::move(group)) {
    const int n = static_cast<int>(table_.size());
    for (int e = 0; e < n; ++e) {
      bool is_identity = true;
      for (int a = 0; a < n && is_identity; ++a) {
        is_identity = table_[e][a] == a && table_[a][e] == a;
      }
      if (is_identity) {
        identity_ = e;
        break;
      }
    }
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (table_[a][b] == identity_) inverse_[a] = b;
      }
    }
    commutative_ = true;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (table_[a][b] != table_[b][a]) commutative_ = false;
      }
    }
  }

  TractKind kind() const override { return TractKind::kMinTract; }
  TractDescriptor descriptor() const override {
    TractDescriptor d = named("min_tract");
    if (!group_.empty()) {
      d.group = group_;
    } else {
      d.table = table_;
    }
    return d;
  }
  bool commutative() const override { return commutative_; }
  bool valid(const Rational& x) const override {
    return x.denominator() == 1 && x.numerator() >= 0 &&
           x.numerator() < static_cast<std::int64_t>(table_.size());
  }
  Rational one() const override { return identity_; }
  Rational epsilon() const override { return identity_; }
  Rational mul(const Rational& a, const Rational& b) const override {
    return table_[a.numerator()][b.numerator()];
  }
  Rational inv(const Rational& a) const override {
    return inverse_[a.numerator()];
  }
  bool is_null(std::span<const Rational> terms) const override {
    std::map<std::int64_t, int> count;
    for (const Rational& t : terms) ++count[t.numerator()];
    return std::all_of(count.begin(), count.end(),
                       [](const auto& kv) { return kv.second % 2 == 0; });
  }
  std::optional<std::vector<Rational>> elements() const override {
    std::vector<Rational> out;
    for (std::size_t i = 0; i < table_.size(); ++i) {
      out.emplace_back(static_cast<std::int64_t>(i));
    }
    return out;
  }
  Rational parse(std::string_view text) const override {
    if (text.size() < 2 || text.front() != 'g') {
      throw ParseError("min_tract value must look like g<index>, got '" +
                       std::string(text) + "'");
    }
    return parse_rational(text.substr(1));
  }
  std::string format(const Rational& x) const override {
    return "g" + std::to_string(x.numerator());
  }

 private:
  std::vector<std::vector<int>> table_;
  std::string group_;
  int identity_ = 0;
  std::vector<int> inverse_;
  bool commutative_ = true;
};

class PatchedModel final : public TractModel {
 public:
  PatchedModel(std::shared_ptr<const TractModel> base, Tract base_tract,
               NullPredicate pred)
      : base_(std::move(base)),
        base_tract_(std::move(base_tract)),
        pred_(std::move(pred)) {}

  TractKind kind() const override { return TractKind::kCustom; }
  TractDescriptor descriptor() const override {
    TractDescriptor d = base_->descriptor();
    d.name = name;
    return d;
  }
  bool commutative() const override { return base_->commutative(); }
  bool valid(const Rational& x) const override { return base_->valid(x); }
  Rational one() const override { return base_->one(); }
  Rational epsilon() const override { return base_->epsilon(); }
  Rational mul(const Rational& a, const Rational& b) const override {
    return base_->mul(a, b);
  }
  Rational inv(const Rational& a) const override { return base_->inv(a); }
  Rational conj(const Rational& a) const override { return base_->conj(a); }
  bool is_null(std::span<const Rational> terms) const override {
    FormalSum sum;
    for (const Rational& t : terms) sum.add(GroupElement(base_->id, t));
    return pred_(base_tract_, sum);
  }
  std::optional<std::vector<Rational>> elements() const override {
    return base_->elements();
  }
  std::vector<Rational> pool() const override { return base_->pool(); }
  std::string zero_text() const override { return base_->zero_text(); }
  Rational parse(std::string_view text) const override {
    return base_->parse(text);
  }
  std::string format(const Rational& x) const override {
    return base_->format(x);
  }

 private:
  std::shared_ptr<const TractModel> base_;
  Tract base_tract_;
  NullPredicate pred_;
};

template <typename Model, typename... Args>
std::shared_ptr<const TractModel> make_model(const std::string& key,
                                             std::string name,
                                             Args&&... args) {
  auto model = std::make_shared<Model>(std::forward<Args>(args)...);
  model->id = detail::intern_tract_key(key);
  model->name = std::move(name);
  return model;
}

std::vector<std::vector<int>> symmetric_group_s3() {
  // Permutations of {0,1,2} in one-line notation; index 0 is the identity.
  const std::vector<std::array<int, 3>> perms = {
      {0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a) {
    for (int b = 0; b < 6; ++b) {
      // (a*b)(x) = a(b(x))
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      table[a][b] = static_cast<int>(
          std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return table;
}

std::vector<std::vector<int>> cyclic_group(int n) {
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return table;
}

void validate_group_table(const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw InvalidArgument("group table is empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n) {
      throw InvalidArgument("group table is not square");
    }
    for (int v : row) {
      if (v < 0 || v >= n) {
        throw InvalidArgument("group table is not closed: entry " +
                              std::to_string(v));
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw InvalidArgument("group table is not associative at (" +
                                std::to_string(a) + "," + std::to_string(b) +
                                "," + std::to_string(c) + ")");
        }
      }
    }
  }
  int identity = -1;
  for (int e = 0; e < n && identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = table[e][a] == a && table[a][e] == a;
    if (ok) identity = e;
  }
  if (identity < 0) throw InvalidArgument("group table has no identity");
  for (int a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (int b = 0; b < n; ++b) {
      if (table[a][b] == identity && table[b][a] == identity) has_inverse = true;
    }
    if (!has_inverse) {
      throw InvalidArgument("group table: element " + std::to_string(a) +
                            " has no inverse");
    }
  }
}

std::string table_key(const std::vector<std::vector<int>>& table) {
  std::ostringstream out;
  for (const auto& row : table) {
    for (int v : row) out << v << ',';
    out << ';';
  }
  return out.str();
}

}  // namespace

Tract::Tract(std::shared_ptr<const detail::TractModel> model)
    : model_(std::move(model)) {}

Tract Tract::krasner() {
  static const Tract t(make_model<KrasnerModel>("krasner", "krasner"));
  return t;
}

Tract Tract::sign() {
  static const Tract t(make_model<SignModel>("sign", "sign"));
  return t;
}

Tract Tract::prime_field(int p) {
  if (!is_prime(p)) {
    throw InvalidArgument("gf(p) requires a prime, got " + std::to_string(p));
  }
  if (p > 1'000'003) throw InvalidArgument("gf(p): prime too large");
  const std::string name = "gf(" + std::to_string(p) + ")";
  return Tract(make_model<PrimeFieldModel>(name, name, p));
}

Tract Tract::tropical() {
  static const Tract t(make_model<TropicalModel>("tropical", "tropical"));
  return t;
}

Tract Tract::ultratriangle() {
  static const Tract t(
      make_model<UltratriangleModel>("ultratriangle", "ultratriangle"));
  return t;
}

Tract Tract::phase() {
  static const Tract t(make_model<PhaseModel>("phase", "phase"));
  return t;
}

Tract Tract::min_tract(std::vector<std::vector<int>> table) {
  validate_group_table(table);
  const std::string key = "min_tract:" + table_key(table);
  return Tract(make_model<MinTractModel>(key, "min_tract", std::move(table),
                                         std::string()));
}

Tract Tract::min_tract(std::string_view group) {
  std::vector<std::vector<int>> table;
  if (group == "S3") {
    table = symmetric_group_s3();
  } else if (group.size() >= 2 && group.front() == 'C') {
    const Rational n = parse_rational(group.substr(1));
    if (n.denominator() != 1 || n < 1 || n > 64) {
      throw InvalidArgument("unsupported cyclic group '" + std::string(group) +
                            "'");
    }
    table = cyclic_group(static_cast<int>(n.numerator()));
  } else {
    throw InvalidArgument("unknown group '" + std::string(group) + "'");
  }
  const std::string name = "min_tract(" + std::string(group) + ")";
  return Tract(make_model<MinTractModel>("min_tract:" + table_key(table), name,
                                         std::move(table),
                                         std::string(group)));
}

Tract Tract::patched(const Tract& base, std::string name, NullPredicate pred) {
  auto model = std::make_shared<PatchedModel>(base.model_, base,
                                              std::move(pred));
  model->id = detail::fresh_tract_id("patched:" + name);
  model->name = std::move(name);
  return Tract(std::move(model));
}

Tract make_tract(const TractDescriptor& d) {
  if (d.name == "krasner") return Tract::krasner();
  if (d.name == "sign") return Tract::sign();
  if (d.name == "gf") return Tract::prime_field(d.p);
  if (d.name == "tropical") return Tract::tropical();
  if (d.name == "ultratriangle") return Tract::ultratriangle();
  if (d.name == "phase") return Tract::phase();
  if (d.name == "min_tract") {
    if (!d.table.empty()) return Tract::min_tract(d.table);
    return Tract::min_tract(d.group);
  }
  throw InvalidArgument("unknown tract '" + d.name + "'");
}

std::uint32_t Tract::id() const { return model_->id; }
const std::string& Tract::name() const { return model_->name; }
TractKind Tract::kind() const { return model_->kind(); }
TractDescriptor Tract::descriptor() const { return model_->descriptor(); }
bool Tract::commutative() const { return model_->commutative(); }
bool Tract::finite() const { return model_->elements().has_value(); }

std::vector<GroupElement> Tract::elements() const {
  auto raw = model_->elements();
  if (!raw) throw InvalidArgument(name() + " has infinitely many elements");
  std::vector<GroupElement> out;
  for (const Rational& r : *raw) out.emplace_back(id(), r);
  return out;
}

std::vector<GroupElement> Tract::sample_pool() const {
  std::vector<GroupElement> out;
  for (const Rational& r : model_->pool()) out.emplace_back(id(), r);
  return out;
}

std::vector<GroupElement> Tract::sample(std::mt19937_64& rng,
                                        std::size_t count) const {
  const auto pool = sample_pool();
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::vector<GroupElement> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(pool[pick(rng)]);
  return out;
}

GroupElement Tract::one() const { return {id(), model_->one()}; }
GroupElement Tract::epsilon() const { return {id(), model_->epsilon()}; }

void Tract::require_member(const GroupElement& g) const {
  if (g.tract_id() != id()) {
    throw InvalidArgument("element does not belong to tract " + name());
  }
}

GroupElement Tract::mul(const GroupElement& a, const GroupElement& b) const {
  require_member(a);
  require_member(b);
  return {id(), model_->mul(a.value(), b.value())};
}

TractValue Tract::mul(const TractValue& a, const TractValue& b) const {
  if (a.nonzero()) require_member(a.element());
  if (b.nonzero()) require_member(b.element());
  if (a.is_zero() || b.is_zero()) return TractValue::zero();
  return mul(a.element(), b.element());
}

GroupElement Tract::inv(const GroupElement& a) const {
  require_member(a);
  return {id(), model_->inv(a.value())};
}

TractValue Tract::inv(const TractValue& a) const {
  if (a.is_zero()) throw InvalidArgument("division by zero in " + name());
  return inv(a.element());
}

GroupElement Tract::conj(const GroupElement& a) const {
  require_member(a);
  return {id(), model_->conj(a.value())};
}

TractValue Tract::conj(const TractValue& a) const {
  if (a.is_zero()) return a;
  return conj(a.element());
}

GroupElement Tract::neg(const GroupElement& a) const {
  return mul(epsilon(), a);
}

TractValue Tract::neg(const TractValue& a) const {
  if (a.is_zero()) return a;
  return neg(a.element());
}

bool Tract::is_null(const FormalSum& sum) const {
  std::vector<Rational> raw;
  raw.reserve(sum.size());
  for (const GroupElement& g : sum.terms()) {
    require_member(g);
    raw.push_back(g.value());
  }
  return model_->is_null(raw);
}

bool Tract::contains(const GroupElement& g) const {
  return g.tract_id() == id() && model_->valid(g.value());
}

GroupElement Tract::element(const Rational& payload) const {
  if (!model_->valid(payload)) {
    throw InvalidArgument("'" + format_rational(payload) +
                          "' is not an element of " + name());
  }
  return {id(), payload};
}

TractValue Tract::parse(std::string_view text) const {
  if (text == model_->zero_text()) return TractValue::zero();
  Rational payload;
  try {
    payload = model_->parse(text);
  } catch (const ParseError& e) {
    throw ParseError("invalid " + name() + " value '" + std::string(text) +
                     "': " + e.what());
  }
  if (!model_->valid(payload)) {
    throw ParseError("'" + std::string(text) + "' is not a value of " + name());
  }
  return GroupElement(id(), payload);
}

std::string Tract::format(const TractValue& v) const {
  if (v.is_zero()) return model_->zero_text();
  return format(v.element());
}

std::string Tract::format(const GroupElement& g) const {
  require_member(g);
  return model_->format(g.value());
}

void for_each_multiset(const std::vector<GroupElement>& pool,
                       std::size_t max_length,
                       const std::function<void(const FormalSum&)>& fn) {
  std::vector<GroupElement> current;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    fn(FormalSum(current));
    if (current.size() == max_length) return;
    for (std::size_t i = start; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      rec(i);
      current.pop_back();
    }
  };
  rec(0);
}

namespace {

FormalSum left_act(const Tract& t, const GroupElement& g, const FormalSum& s) {
  FormalSum out;
  for (const auto& x : s.terms()) out.add(t.mul(g, x));
  return out;
}

FormalSum right_act(const Tract& t, const FormalSum& s, const GroupElement& g) {
  FormalSum out;
  for (const auto& x : s.terms()) out.add(t.mul(x, g));
  return out;
}

std::string describe(const Tract& t, const FormalSum& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ", ";
    out += t.format(s.terms()[i]);
  }
  return out + "}";
}

}  // namespace

TractAxiomReport check_tract_axioms(const Tract& t,
                                    const AxiomCheckOptions& options) {
  TractAxiomReport report;
  report.max_length = options.max_length;
  report.exhaustive = t.finite();
  const std::vector<GroupElement> pool = t.sample_pool();
  const GroupElement one = t.one();

  auto fail = [&](std::string msg) {
    report.passed = false;
    report.failures.push_back(std::move(msg));
  };

  std::vector<FormalSum> sums;
  if (report.exhaustive) {
    for_each_multiset(pool, options.max_length,
                      [&](const FormalSum& s) { sums.push_back(s); });
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> len(0, options.max_length);
    for (std::size_t i = 0; i < options.samples; ++i) {
      sums.emplace_back(t.sample(rng, len(rng)));
    }
    report.samples = options.samples;
  }

  if (!t.is_null(FormalSum{})) fail("axiom (1): the empty sum is not null");
  if (t.is_null(FormalSum{one})) fail("axiom (2): {1} is null");
  for (const auto& g : pool) {
    if (t.is_null(FormalSum{g})) {
      fail("derived axiom: singleton {" + t.format(g) + "} is null");
      break;
    }
  }

  std::vector<GroupElement> eps_candidates;
  for (const auto& g : pool) {
    if (t.is_null(FormalSum{one, g})) eps_candidates.push_back(g);
  }
  const GroupElement eps = t.epsilon();
  if (!t.is_null(FormalSum{one, eps})) {
    fail("axiom (3): {1, epsilon} is not null for epsilon = " + t.format(eps));
  }
  for (const auto& g : eps_candidates) {
    if (!(g == eps)) {
      fail("axiom (3): epsilon is not unique: {1, " + t.format(g) +
           "} is also null");
      break;
    }
  }
  if (report.exhaustive && eps_candidates.size() != 1) {
    fail("axiom (3): " + std::to_string(eps_candidates.size()) +
         " elements g have {1, g} null");
  }
  if (!(t.mul(eps, eps) == one)) fail("derived axiom: epsilon^2 != 1");

  bool left_ok = true;
  for (const auto& s : sums) {
    const bool base = t.is_null(s);
    for (const auto& g : pool) {
      if (left_ok && t.is_null(left_act(t, g, s)) != base) {
        fail("axiom (4): nullness of " + describe(t, s) +
             " changes under left multiplication by " + t.format(g));
        left_ok = false;
      }
      if (report.right_action_closed &&
          t.is_null(right_act(t, s, g)) != base) {
        report.right_action_closed = false;
      }
    }
    if (!left_ok) break;
  }

  for (const auto& x : pool) {
    for (const auto& y : pool) {
      if (t.is_null(FormalSum{x, y}) &&
          !(y == t.mul(eps, x) && y == t.mul(x, eps))) {
        fail("derived axiom: {" + t.format(x) + ", " + t.format(y) +
             "} is null but y != epsilon*x");
      }
      if (!(t.mul(x, y) == t.mul(y, x))) report.noncommutative = true;
    }
  }
  if (report.noncommutative == t.commutative()) {
    fail("declared commutativity does not match the multiplication");
  }

  // Involution
  if (!(t.conj(one) == one)) fail("involution: conj(1) != 1");
  for (const auto& x : pool) {
    if (!(t.conj(t.conj(x)) == x)) {
      fail("involution: conj is not an involution at " + t.format(x));
      break;
    }
    for (const auto& y : pool) {
      if (!(t.conj(t.mul(x, y)) == t.mul(t.conj(x), t.conj(y)))) {
        fail("involution: conj(" + t.format(x) + "*" + t.format(y) +
             ") is not multiplicative");
        break;
      }
    }
  }
  for (const auto& s : sums) {
    if (!t.is_null(s)) continue;
    FormalSum image;
    for (const auto& x : s.terms()) image.add(t.conj(x));
    if (!t.is_null(image)) {
      fail("involution: conj does not preserve null sum " + describe(t, s));
      break;
    }
  }
  return report;
}

}  // namespace skewmat
