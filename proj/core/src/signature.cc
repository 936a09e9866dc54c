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

#include "skewmat/signature.h"

#include <algorithm>

namespace skewmat {

const char* side_name(Side s) { return s == Side::kLeft ? "left" : "right"; }

Subset TVector::support() const {
  Subset s;
  for (int e = 0; e < size(); ++e) {
    if (entries_[e].nonzero()) s = s.with(e);
  }
  return s;
}

TVector left_scale(const Tract& t, const GroupElement& g, const TVector& x) {
  TVector out = x;
  for (int e = 0; e < x.size(); ++e) out[e] = t.mul(TractValue(g), x[e]);
  return out;
}

TVector right_scale(const Tract& t, const TVector& x, const GroupElement& g) {
  TVector out = x;
  for (int e = 0; e < x.size(); ++e) out[e] = t.mul(x[e], TractValue(g));
  return out;
}

TVector scale(const Tract& t, Side side, const GroupElement& g,
              const TVector& x) {
  return side == Side::kLeft ? left_scale(t, g, x) : right_scale(t, x, g);
}

GroupElement ratio(const Tract& t, Side side, const TVector& x, int a, int b) {
  const GroupElement xa = t.inv(x[a].element());
  const GroupElement& xb = x[b].element();
  return side == Side::kLeft ? t.mul(xa, xb) : t.mul(xb, xa);
}

GroupElement side_product(const Tract& t, Side side,
                          std::initializer_list<GroupElement> factors) {
  GroupElement out = t.one();
  if (side == Side::kLeft) {
    for (const auto& g : factors) out = t.mul(out, g);
  } else {
    for (const auto& g : factors) out = t.mul(g, out);
  }
  return out;
}

std::string format_vector(const Tract& t, const TVector& x) {
  std::string out = "(";
  for (int e = 0; e < x.size(); ++e) {
    if (e > 0) out += ",";
    out += t.format(x[e]);
  }
  return out + ")";
}

namespace {

bool rep_less(const TVector& a, const TVector& b) {
  const Subset sa = a.support();
  const Subset sb = b.support();
  if (!(sa == sb)) return sa < sb;
  return a < b;
}

}  // namespace

Signature::Signature(Tract tract, std::vector<std::string> ground, Side side,
                     std::vector<TVector> vectors)
    : tract_(std::move(tract)), ground_(std::move(ground)), side_(side) {
  for (std::size_t i = 1; i < ground_.size(); ++i) {
    if (!(ground_[i - 1] < ground_[i])) {
      throw InvalidArgument("ground labels must be distinct and sorted");
    }
  }
  if (size() > kMaxGroundSize) throw InvalidArgument("ground set too large");
  for (const TVector& v : vectors) {
    if (v.size() != size()) {
      throw InvalidArgument("vector of length " + std::to_string(v.size()) +
                            " over a ground set of size " +
                            std::to_string(size()));
    }
    for (const TractValue& x : v.entries()) {
      if (x.nonzero() && !tract_.contains(x.element())) {
        throw InvalidArgument("vector entry outside " + tract_.name());
      }
    }
    reps_.push_back(normalize(v));
  }
  std::sort(reps_.begin(), reps_.end(), rep_less);
  reps_.erase(std::unique(reps_.begin(), reps_.end()), reps_.end());
}

TVector Signature::normalize(const TVector& x) const {
  const Subset s = x.support();
  if (s.empty()) return x;
  const GroupElement g = tract_.inv(x[s.min()].element());
  return scale(tract_, side_, g, x);
}

bool Signature::contains(const TVector& x) const {
  if (x.size() != size() || x.is_zero()) return false;
  for (const TractValue& v : x.entries()) {
    if (v.nonzero() && !tract_.contains(v.element())) {
      throw InvalidArgument("vector entry outside " + tract_.name());
    }
  }
  return std::binary_search(reps_.begin(), reps_.end(), normalize(x),
                            rep_less);
}

std::vector<TVector> Signature::with_support(Subset s) const {
  std::vector<TVector> out;
  for (const auto& r : reps_) {
    if (r.support() == s) out.push_back(r);
  }
  return out;
}

std::vector<Subset> Signature::supports() const {
  std::vector<Subset> out;
  for (const auto& r : reps_) out.push_back(r.support());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SupportMatroid Signature::underlying() const {
  return SupportMatroid::from_circuits(ground_, supports());
}

namespace {

CheckResult check_c1_c3(const Signature& sig) {
  const auto& reps = sig.reps();
  const Tract& t = sig.tract();
  for (const auto& r : reps) {
    if (r.is_zero()) return CheckResult::fail("C1: the zero vector is a circuit");
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < reps.size(); ++j) {
      if (i == j) continue;
      if (reps[i].support().is_subset_of(reps[j].support())) {
        return CheckResult::fail(
            "C3: support of " + format_vector(t, reps[i]) +
            " is contained in the support of " + format_vector(t, reps[j]) +
            " but they are not scalar multiples");
      }
    }
  }
  return CheckResult::pass();
}

}  // namespace

CheckResult check_signature(const Signature& sig) {
  if (CheckResult r = check_c1_c3(sig); !r) return r;
  return check_matroid_circuits(sig.size(), sig.supports());
}

CheckResult check_signature(const Signature& sig, const SupportMatroid& m) {
  if (CheckResult r = check_c1_c3(sig); !r) return r;
  if (m.ground() != sig.ground()) {
    return CheckResult::fail("signature and matroid have different ground sets");
  }
  const auto supports = sig.supports();
  for (Subset c : m.circuits()) {
    if (!std::binary_search(supports.begin(), supports.end(), c)) {
      return CheckResult::fail("circuit " + m.format(c) +
                               " has no signed representative");
    }
  }
  for (Subset s : supports) {
    if (!m.is_circuit(s)) {
      return CheckResult::fail("support " + m.format(s) +
                               " is not a circuit of the matroid");
    }
  }
  return CheckResult::pass();
}

namespace {

struct EliminationAttempt {
  std::optional<TVector> z;
  std::string failure;  // first failing candidate, if any
};

EliminationAttempt try_eliminate(const Signature& sig, const TVector& x,
                                 const std::vector<TVector>& others,
                                 const std::vector<int>& eliminated) {
  const Tract& t = sig.tract();
  const Side side = sig.side();
  const int n = sig.size();
  Subset rest;
  for (const auto& o : others) rest = rest | o.support();
  const Subset all = rest | x.support();
  const Subset free_part = x.support() - rest;
  EliminationAttempt out;
  if (free_part.empty()) {
    out.failure = "supp X is covered by the other circuits";
    return out;
  }
  // Nullness at z0 forces Z(z0) = X(z0).
  const int z0 = free_part.min();
  const GroupElement eps = t.epsilon();
  for (const TVector& rep : sig.reps()) {
    const Subset s = rep.support();
    if (!s.is_subset_of(all) || !s.contains(z0)) continue;
    if (std::any_of(eliminated.begin(), eliminated.end(),
                    [&](int e) { return s.contains(e); })) {
      continue;
    }
    const GroupElement r0 = t.inv(rep[z0].element());
    const GroupElement gamma = side == Side::kLeft
                                   ? t.mul(x[z0].element(), r0)
                                   : t.mul(r0, x[z0].element());
    const TVector z = scale(t, side, gamma, rep);
    bool ok = true;
    for (int f = 0; f < n && ok; ++f) {
      FormalSum sum;
      sum.add(x[f]);
      for (const auto& o : others) sum.add(o[f]);
      sum.add(t.mul(TractValue(eps), z[f]));
      if (!t.is_null(sum)) {
        ok = false;
        if (out.failure.empty()) {
          std::string terms;
          for (const auto& g : sum.terms()) terms += " " + t.format(g);
          out.failure = "candidate Z=" + format_vector(t, z) + " fails at f=" +
                        sig.ground()[f] + " with non-null sum {" + terms +
                        " }";
        }
      }
    }
    if (ok) {
      out.z = z;
      return out;
    }
  }
  if (out.failure.empty()) out.failure = "no circuit avoids the eliminated elements";
  return out;
}

CheckResult eliminate_all(const Signature& sig, int max_family) {
  if (CheckResult r = check_signature(sig); !r) return r;
  const SupportMatroid m = sig.underlying();
  const Tract& t = sig.tract();
  const Side side = sig.side();
  const auto& reps = sig.reps();
  const int count = static_cast<int>(reps.size());
  const int bound =
      std::min(max_family <= 0 ? sig.size() : max_family, m.nullity(m.full()) - 1);

  std::vector<GroupElement> betas{t.one()};
  if (side == Side::kRight && !t.commutative()) betas = t.sample_pool();

  const GroupElement eps = t.epsilon();
  for (int k = 1; k <= bound; ++k) {
    for (int xi = 0; xi < count; ++xi) {
      const Subset others_pool = Subset::full(count).without(xi);
      CheckResult result;
      for_each_subset_of_size(others_pool, k, [&](Subset family) {
        if (!result) return;
        const std::vector<int> idx = family.elements();
        Subset rest;
        for (int i : idx) rest = rest | reps[i].support();
        const Subset sx = reps[xi].support();
        if (sx.is_subset_of(rest)) return;
        if (m.nullity(sx | rest) != k + 1) return;
        std::vector<std::vector<int>> candidates;
        for (int a = 0; a < k; ++a) {
          Subset c = sx & reps[idx[a]].support();
          for (int b = 0; b < k; ++b) {
            if (b != a) c = c - reps[idx[b]].support();
          }
          if (c.empty()) return;
          candidates.push_back(c.elements());
        }
        std::vector<std::size_t> pos(k, 0);
        for (const auto& beta : betas) {
          const TVector x = scale(t, side, beta, reps[xi]);
          std::fill(pos.begin(), pos.end(), 0);
          while (true) {
            std::vector<int> es(k);
            std::vector<TVector> others;
            for (int a = 0; a < k; ++a) {
              const int e = candidates[a][pos[a]];
              es[a] = e;
              const TVector& r = reps[idx[a]];
              const GroupElement target = t.mul(eps, x[e].element());
              const GroupElement ri = t.inv(r[e].element());
              const GroupElement alpha = side == Side::kLeft
                                             ? t.mul(target, ri)
                                             : t.mul(ri, target);
              others.push_back(scale(t, side, alpha, r));
            }
            const EliminationAttempt attempt = try_eliminate(sig, x, others, es);
            if (!attempt.z) {
              std::string msg = k == 1 ? "modular pair" : "modular family";
              msg += " X=" + format_vector(t, x);
              for (int a = 0; a < k; ++a) {
                msg += ", X" + std::to_string(a + 1) + "=" +
                       format_vector(t, others[a]);
              }
              msg += "; eliminating";
              for (int e : es) msg += " " + sig.ground()[e];
              msg += ": no circuit Z works (" + attempt.failure + ")";
              result = CheckResult::fail(msg);
              return;
            }
            int a = k - 1;
            while (a >= 0 && pos[a] + 1 == candidates[a].size()) {
              pos[a] = 0;
              --a;
            }
            if (a < 0) break;
            ++pos[a];
          }
        }
      });
      if (!result) return result;
    }
  }
  return CheckResult::pass();
}

}  // namespace

std::optional<TVector> find_eliminator(const Signature& sig, const TVector& x,
                                       const std::vector<TVector>& others,
                                       const std::vector<int>& eliminated) {
  return try_eliminate(sig, x, others, eliminated).z;
}

CheckResult check_weak_circuits(const Signature& sig) {
  return eliminate_all(sig, 1);
}

CheckResult check_strong_circuits(const Signature& sig,
                                  const EliminationOptions& options) {
  return eliminate_all(sig, options.max_family);
}

Signature rescale(const Signature& sig, const std::vector<GroupElement>& rho,
                  RescaleMode mode) {
  const Tract& t = sig.tract();
  if (static_cast<int>(rho.size()) != sig.size()) {
    throw InvalidArgument("rescaling vector has the wrong length");
  }
  for (const auto& g : rho) {
    if (!t.contains(g)) throw InvalidArgument("rescaling entry outside " + t.name());
  }
  if (!t.commutative()) {
    const bool compatible = (sig.side() == Side::kLeft) ==
                            (mode == RescaleMode::kRight);
    if (!compatible) {
      throw InvalidArgument(
          std::string("a ") + side_name(sig.side()) +
          " signature over a noncommutative tract must be rescaled on the " +
          (sig.side() == Side::kLeft ? "right" : "left"));
    }
  }
  std::vector<TVector> out;
  for (const auto& r : sig.reps()) {
    TVector v = r;
    for (int e = 0; e < v.size(); ++e) {
      const TractValue inv = t.inv(rho[e]);
      v[e] = mode == RescaleMode::kRight ? t.mul(r[e], inv) : t.mul(inv, r[e]);
    }
    out.push_back(std::move(v));
  }
  return Signature(t, sig.ground(), sig.side(), std::move(out));
}

Signature pushforward(const TractHom& f, const Signature& sig) {
  if (!(f.source() == sig.tract())) {
    throw InvalidArgument("homomorphism source " + f.source().name() +
                          " does not match " + sig.tract().name());
  }
  std::vector<TVector> out;
  for (const auto& r : sig.reps()) {
    TVector v = r;
    for (int e = 0; e < v.size(); ++e) v[e] = f.apply(r[e]);
    out.push_back(std::move(v));
  }
  return Signature(f.target(), sig.ground(), sig.side(), std::move(out));
}

Signature krasner_signature(const SupportMatroid& m, Side side) {
  const Tract k = Tract::krasner();
  std::vector<TVector> out;
  for (Subset c : m.circuits()) {
    TVector v = TVector::zeros(m.size());
    for (int e : c.elements()) v[e] = k.one();
    out.push_back(std::move(v));
  }
  return Signature(k, m.ground(), side, std::move(out));
}

}  // namespace skewmat
