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

#include "instance_file.h"

#include <algorithm>
#include <numeric>

#include "skewmat/error.h"

namespace skewmat::cli {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const json& member(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
  return *it;
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const json& x : j) out.push_back(as_string(x, what));
  return out;
}

// Maps file order to sorted order: sorted[i] = original[perm[i]].
struct GroundOrder {
  std::vector<std::string> sorted;
  std::vector<int> perm;

  explicit GroundOrder(const std::vector<std::string>& labels) {
    perm.resize(labels.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return labels[a] < labels[b]; });
    for (int i : perm) sorted.push_back(labels[i]);
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i] == sorted[i - 1]) bad("duplicate ground label " + sorted[i]);
    }
    if (sorted.size() > static_cast<std::size_t>(kMaxGroundSize)) {
      bad("ground set larger than " + std::to_string(kMaxGroundSize));
    }
  }

  template <typename T>
  std::vector<T> apply(const std::vector<T>& row) const {
    std::vector<T> out;
    for (int i : perm) out.push_back(row[i]);
    return out;
  }
};

std::vector<TVector> parse_vectors(const json& j, const Tract& t,
                                   const GroundOrder& order, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of vectors");
  std::vector<TVector> out;
  for (const json& row : j) {
    const auto texts = string_list(row, what);
    if (texts.size() != order.sorted.size()) {
      bad(std::string(what) + ": vector of length " +
          std::to_string(texts.size()) + " over a ground set of size " +
          std::to_string(order.sorted.size()));
    }
    std::vector<TractValue> entries;
    for (const auto& s : order.apply(texts)) entries.push_back(t.parse(s));
    out.emplace_back(std::move(entries));
  }
  return out;
}

json vectors_to_json(const Signature& sig) {
  json out = json::array();
  for (const TVector& x : sig.reps()) {
    json row = json::array();
    for (const TractValue& v : x.entries()) row.push_back(sig.tract().format(v));
    out.push_back(std::move(row));
  }
  return out;
}

Side parse_side(const json& j) {
  const std::string s = as_string(j, "side");
  if (s == "left") return Side::kLeft;
  if (s == "right") return Side::kRight;
  bad("side must be \"left\" or \"right\"");
}

const char* field_name(Field f) {
  switch (f) {
    case Field::kPrime: return "gf";
    case Field::kRationals: return "rationals";
    case Field::kValued: return "valued";
    case Field::kGaussian: return "gaussian";
  }
  return "";
}

Realization parse_realization(const json& j, const GroundOrder& order) {
  if (!j.is_object()) bad("realization must be an object");
  const std::string field = as_string(member(j, "field"), "field");
  int prime = 0;
  if (field == "gf" || field == "valued") {
    const json& p = member(j, "prime");
    if (!p.is_number_integer()) bad("prime must be an integer");
    prime = p.get<int>();
  }
  const json& rows = member(j, "matrix");
  if (!rows.is_array()) bad("matrix must be an array of rows");
  std::vector<std::vector<Gaussian>> m;
  for (const json& row : rows) {
    const auto texts = string_list(row, "matrix row");
    if (texts.size() != order.sorted.size()) {
      bad("matrix row length does not match the ground set");
    }
    auto& out = m.emplace_back();
    for (const auto& s : order.apply(texts)) out.push_back(parse_gaussian(s));
  }
  auto real_part = [&] {
    std::vector<std::vector<BigRational>> r;
    for (const auto& row : m) {
      auto& out = r.emplace_back();
      for (const Gaussian& z : row) {
        if (z.im != 0) bad("complex entry in a " + field + " realization");
        out.push_back(z.re);
      }
    }
    return r;
  };
  if (field == "rationals") return Realization::over_rationals(real_part());
  if (field == "valued") return Realization::over_valued(prime, real_part());
  if (field == "gaussian") return Realization::over_gaussian(m);
  if (field == "gf") {
    std::vector<std::vector<std::int64_t>> r;
    for (const auto& row : real_part()) {
      auto& out = r.emplace_back();
      for (const BigRational& x : row) {
        if (boost::multiprecision::denominator(x) != 1) {
          bad("non-integer entry in a gf realization");
        }
        out.push_back(
            static_cast<std::int64_t>(boost::multiprecision::numerator(x)));
      }
    }
    return Realization::over_prime_field(prime, r);
  }
  bad("unknown realization field \"" + field + "\"");
}

json realization_to_json(const Realization& real) {
  json j;
  j["field"] = field_name(real.field);
  if (real.field == Field::kPrime || real.field == Field::kValued) {
    j["prime"] = real.prime;
  }
  json rows = json::array();
  for (const auto& row : real.matrix) {
    json r = json::array();
    for (const Gaussian& z : row) r.push_back(format_gaussian(z));
    rows.push_back(std::move(r));
  }
  j["matrix"] = std::move(rows);
  return j;
}

PluckerMap parse_plucker(const json& j, const Tract& t,
                         const std::vector<std::string>& ground, Side side) {
  if (!j.is_object()) bad("plucker must be an object");
  const json& bases_json = member(j, "bases");
  if (!bases_json.is_array()) bad("bases must be an array");
  // Subsets are built against the free matroid so that labels resolve
  // before the real matroid exists.
  const SupportMatroid free = SupportMatroid::free_matroid(ground);
  std::vector<Subset> bases;
  for (const json& b : bases_json) {
    bases.push_back(free.subset_of(string_list(b, "basis")));
  }
  SupportMatroid m = SupportMatroid::from_bases(ground, bases);
  const json& values_json = member(j, "values");
  if (!values_json.is_array()) bad("values must be an array");
  PluckerMap::Values values;
  for (const json& rec : values_json) {
    if (!rec.is_object()) bad("plucker value records must be objects");
    const Subset from = free.subset_of(string_list(member(rec, "from"), "from"));
    const Subset to = free.subset_of(string_list(member(rec, "to"), "to"));
    const TractValue v = t.parse(as_string(member(rec, "value"), "value"));
    if (v.is_zero()) bad("plucker values must be nonzero");
    if (!values.emplace(AdjacentBasisPair{from, to}, v.element()).second) {
      bad("duplicate plucker record");
    }
  }
  return PluckerMap(std::move(m), t, side, std::move(values));
}

json plucker_to_json(const PluckerMap& pm) {
  const SupportMatroid& m = pm.matroid();
  json bases = json::array();
  for (Subset b : m.bases()) bases.push_back(m.labels_of(b));
  json values = json::array();
  for (const auto& [pair, g] : pm.values()) {
    values.push_back({{"from", m.labels_of(pair.from)},
                      {"to", m.labels_of(pair.to)},
                      {"value", pm.tract().format(g)}});
  }
  return {{"bases", std::move(bases)}, {"values", std::move(values)}};
}

}  // namespace

const char* representation_name(Representation r) {
  switch (r) {
    case Representation::kCircuits: return "circuits";
    case Representation::kPlucker: return "plucker";
    case Representation::kDualPair: return "dualpair";
  }
  return "";
}

Representation parse_representation(std::string_view name) {
  if (name == "circuits") return Representation::kCircuits;
  if (name == "plucker") return Representation::kPlucker;
  if (name == "dualpair") return Representation::kDualPair;
  bad("unknown representation \"" + std::string(name) + "\"");
}

const Tract& InstanceFile::tract() const {
  if (circuits) return circuits->tract();
  if (plucker) return plucker->tract();
  return dualpair->circuits.tract();
}

const std::vector<std::string>& InstanceFile::ground() const {
  if (circuits) return circuits->ground();
  if (plucker) return plucker->matroid().ground();
  return dualpair->circuits.ground();
}

Side InstanceFile::side() const {
  if (circuits) return circuits->side();
  if (plucker) return plucker->side();
  return dualpair->circuits.side();
}

json tract_to_json(const Tract& t) {
  const TractDescriptor d = t.descriptor();
  if (d.name.empty() || t.kind() == TractKind::kCustom) {
    throw InvalidArgument("tract " + t.name() + " has no file descriptor");
  }
  json params = json::object();
  if (d.name == "gf") params["p"] = d.p;
  if (d.name == "min_tract") {
    if (!d.group.empty()) {
      params["group"] = d.group;
    } else {
      params["table"] = d.table;
    }
  }
  return {{"tract", d.name}, {"params", std::move(params)}};
}

Tract tract_from_json(const json& j) {
  if (!j.is_object()) bad("tract must be an object");
  TractDescriptor d;
  d.name = as_string(member(j, "tract"), "tract name");
  auto it = j.find("params");
  if (it != j.end()) {
    const json& params = *it;
    if (!params.is_object()) bad("tract params must be an object");
    if (auto p = params.find("p"); p != params.end()) {
      if (!p->is_number_integer()) bad("p must be an integer");
      d.p = p->get<int>();
    }
    if (auto g = params.find("group"); g != params.end()) {
      d.group = as_string(*g, "group");
    }
    if (auto tb = params.find("table"); tb != params.end()) {
      try {
        d.table = tb->get<std::vector<std::vector<int>>>();
      } catch (const json::exception&) {
        bad("table must be an array of integer rows");
      }
    }
  }
  try {
    return make_tract(d);
  } catch (const InvalidArgument& e) {
    bad(e.what());
  }
}

InstanceFile parse_instance(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) bad("instance must be a JSON object");
  const json& format = member(j, "format");
  if (!format.is_number_integer() || format.get<int>() != kFormatVersion) {
    bad("unsupported format version");
  }
  const Tract t = tract_from_json(member(j, "tract"));
  const GroundOrder order(string_list(member(j, "ground"), "ground"));
  const Side side = j.contains("side") ? parse_side(j["side"]) : Side::kLeft;

  InstanceFile f;
  if (j.contains("realization")) {
    f.realization = parse_realization(j["realization"], order);
  }
  int reps = 0;
  for (const char* key : {"circuits", "plucker", "dualpair"}) reps += j.contains(key);
  if (reps > 1) bad("more than one representation given");
  if (reps == 0 && !f.realization) bad("no representation given");

  try {
    if (j.contains("circuits")) {
      f.rep = Representation::kCircuits;
      f.circuits = Signature(t, order.sorted, side,
                             parse_vectors(j["circuits"], t, order, "circuits"));
    } else if (j.contains("plucker")) {
      f.rep = Representation::kPlucker;
      f.plucker = parse_plucker(j["plucker"], t, order.sorted, side);
    } else if (j.contains("dualpair")) {
      f.rep = Representation::kDualPair;
      const json& dp = j["dualpair"];
      if (!dp.is_object()) bad("dualpair must be an object");
      Signature c(t, order.sorted, side,
                  parse_vectors(member(dp, "circuits"), t, order, "circuits"));
      Signature d(t, order.sorted, flip(side),
                  parse_vectors(member(dp, "cocircuits"), t, order,
                                "cocircuits"));
      SupportMatroid m = c.underlying();
      f.dualpair = DualPair{std::move(c), std::move(d), std::move(m)};
    } else {
      if (side != Side::kLeft) bad("realized instances are left signatures");
      f.rep = Representation::kCircuits;
      f.circuits = realization_to_signature(*f.realization, t, order.sorted);
    }
  } catch (const InvalidArgument& e) {
    bad(e.what());
  }
  return f;
}

std::string write_instance(const InstanceFile& f) {
  json j;
  j["format"] = kFormatVersion;
  j["tract"] = tract_to_json(f.tract());
  j["ground"] = f.ground();
  j["side"] = side_name(f.side());
  switch (f.rep) {
    case Representation::kCircuits:
      j["circuits"] = vectors_to_json(*f.circuits);
      break;
    case Representation::kPlucker:
      j["plucker"] = plucker_to_json(*f.plucker);
      break;
    case Representation::kDualPair:
      j["dualpair"] = {{"circuits", vectors_to_json(f.dualpair->circuits)},
                       {"cocircuits", vectors_to_json(f.dualpair->cocircuits)}};
      break;
  }
  if (f.realization) j["realization"] = realization_to_json(*f.realization);
  return j.dump(2) + "\n";
}

InstanceFile from_signature(const Signature& sig) {
  InstanceFile f;
  f.rep = Representation::kCircuits;
  f.circuits = sig;
  return f;
}

InstanceFile from_plucker(const PluckerMap& pm) {
  InstanceFile f;
  f.rep = Representation::kPlucker;
  f.plucker = pm;
  return f;
}

InstanceFile from_dual_pair(const DualPair& dp) {
  InstanceFile f;
  f.rep = Representation::kDualPair;
  f.dualpair = dp;
  return f;
}

}  // namespace skewmat::cli
