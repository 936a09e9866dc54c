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

#include "skewmat/crypto.h"

#include <functional>

namespace skewmat {

const char* strength_name(Strength s) {
  switch (s) {
    case Strength::kInvalid:
      return "invalid";
    case Strength::kWeak:
      return "weak";
    case Strength::kStrong:
      return "strong";
  }
  return "invalid";
}

TMatroid make_tmatroid(const Signature& sig, Strength strength) {
  const SupportMatroid m = sig.underlying();
  PluckerMap coords = coords_from_signature(sig, m);
  Signature co = cocircuits_constructive(sig);
  if (!(signature_from_coords(coords) == sig)) {
    throw AxiomViolation("signature -> coordinates -> signature does not close");
  }
  if (!(coords_from_signature(co, m.dual()) == dual_coords(coords))) {
    throw AxiomViolation("cocircuit coordinates differ from dual coordinates");
  }
  return {sig, std::move(coords), std::move(co), m, strength};
}

namespace {

Classification finish(const Signature& sig, Strength strength,
                      std::string witness) {
  Classification out;
  out.strength = strength;
  out.witness = std::move(witness);
  if (strength != Strength::kInvalid) {
    try {
      out.matroid = make_tmatroid(sig, strength);
    } catch (const Error& e) {
      out.strength = Strength::kInvalid;
      out.matroid.reset();
      out.witness = e.what();
    }
  }
  return out;
}

}  // namespace

Classification classify(const Signature& sig) {
  if (CheckResult r = check_signature(sig); !r) {
    return finish(sig, Strength::kInvalid, r.witness);
  }
  const CheckResult strong = check_strong_circuits(sig);
  if (strong) return finish(sig, Strength::kStrong, "");
  if (CheckResult weak = check_weak_circuits(sig); weak) {
    return finish(sig, Strength::kWeak, strong.witness);
  }
  return finish(sig, Strength::kInvalid, strong.witness);
}

Classification classify(const PluckerMap& pm) {
  Strength strength = Strength::kInvalid;
  const CheckResult strong = check_strong_qp(pm);
  std::string witness = strong.witness;
  if (strong) {
    strength = Strength::kStrong;
  } else if (CheckResult weak = check_weak_qp(pm); weak) {
    strength = Strength::kWeak;
  } else {
    witness = weak.witness;
  }
  if (strength == Strength::kInvalid) {
    Classification out;
    out.witness = witness;
    return out;
  }
  try {
    return finish(signature_from_coords(pm), strength, witness);
  } catch (const Error& e) {
    Classification out;
    out.witness = e.what();
    return out;
  }
}

Classification classify(const DualPair& dp) {
  Strength strength = Strength::kInvalid;
  const CheckResult strong = check_dual_pair(dp, PairMode::kStrong);
  std::string witness = strong.witness;
  if (strong) {
    strength = Strength::kStrong;
  } else if (CheckResult weak = check_dual_pair(dp, PairMode::kWeak); weak) {
    strength = Strength::kWeak;
  } else {
    witness = weak.witness;
  }
  Classification out = finish(dp.circuits, strength, witness);
  if (out.matroid && !(out.matroid->cocircuits == dp.cocircuits)) {
    out.strength = Strength::kInvalid;
    out.matroid.reset();
    out.witness = "cocircuits differ from the ones determined by the circuits";
  }
  return out;
}

RoundtripReport roundtrip_report(const TMatroid& tm) {
  RoundtripReport report;
  auto check = [&](const std::string& name, const std::function<bool()>& fn) {
    bool ok = false;
    std::string detail;
    try {
      ok = fn();
    } catch (const Error& e) {
      detail = std::string(": ") + e.what();
    }
    if (ok) {
      report.passed.push_back(name);
    } else {
      report.ok = false;
      report.failures.push_back(name + detail);
    }
  };
  const Signature& s = tm.signature;
  const PluckerMap& p = tm.coords;
  const Signature& d = tm.cocircuits;
  const SupportMatroid& m = tm.matroid;

  check("signature -> coords -> signature",
        [&] { return signature_from_coords(coords_from_signature(s, m)) == s; });
  check("coords -> signature -> coords",
        [&] { return coords_from_signature(signature_from_coords(p), m) == p; });
  check("signature -> dual pair -> signature", [&] {
    return cocircuits_constructive(cocircuits_constructive(s)) == s;
  });
  check("dual pair -> signature -> dual pair", [&] {
    return cocircuits_constructive(cocircuits_constructive(d)) == d;
  });
  check("coords -> dual pair -> coords", [&] {
    const Signature co = signature_from_coords(dual_coords(p));
    return dual_coords(coords_from_signature(co, m.dual())) == p;
  });
  check("dual pair -> coords -> dual pair", [&] {
    const PluckerMap q = dual_coords(coords_from_signature(d, m.dual()));
    return signature_from_coords(dual_coords(q)) == d;
  });

  check("dual coords are the coords of the cocircuits",
        [&] { return coords_from_signature(d, m.dual()) == dual_coords(p); });
  if (s.tract().finite()) {
    check("orthogonality cocircuits equal constructive cocircuits",
          [&] { return cocircuits_by_orthogonality(s) == d; });
  }
  check("underlying of the dual is the dual of the underlying",
        [&] { return d.underlying() == m.dual(); });
  check("rank of the dual",
        [&] { return m.dual().rank() == m.size() - m.rank(); });
  check("dual coords are an involution",
        [&] { return dual_coords(dual_coords(p)) == p; });

  for (int e = 0; e < m.size(); ++e) {
    const Subset a = Subset::singleton(e);
    check("(M \\ " + m.ground()[e] + ")* = M*/" + m.ground()[e], [&] {
      return cocircuits_constructive(minors(s, a, {})) == minors(d, {}, a);
    });
    check("(M / " + m.ground()[e] + ")* = M*\\" + m.ground()[e], [&] {
      return cocircuits_constructive(minors(s, {}, a)) == minors(d, a, {});
    });
  }

  check("coordinates keep the strength",
        [&] { return classify(p).strength == tm.strength; });
  check("dual pair keeps the strength",
        [&] { return classify(tm.dual_pair()).strength == tm.strength; });
  check("dual keeps the strength",
        [&] { return classify(d).strength == tm.strength; });
  return report;
}

}  // namespace skewmat
