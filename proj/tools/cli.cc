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

#include "cli.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "instance_file.h"
#include "skewmat/crypto.h"
#include "skewmat/error.h"
#include "skewmat/tract_hom.h"

namespace skewmat::cli {

namespace {

struct Options {
  std::string file;
  std::string mode = "auto";
  std::uint64_t seed = 0;
  std::string to;
  std::vector<std::string> del;
  std::vector<std::string> con;
  std::vector<std::string> rho;
  std::string rescale_mode;
  std::string hom;
  std::string hom_file;
};

std::string read_all(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw ParseError("cannot open " + path);
  buf << file.rdbuf();
  return buf.str();
}

Signature circuits_of(const InstanceFile& f) {
  switch (f.rep) {
    case Representation::kCircuits: return *f.circuits;
    case Representation::kPlucker: return signature_from_coords(*f.plucker);
    case Representation::kDualPair: return f.dualpair->circuits;
  }
  throw InvalidArgument("no representation");
}

// The same representation as `like`, built from a circuit signature.
InstanceFile reexpress(const InstanceFile& like, const Signature& sig) {
  switch (like.rep) {
    case Representation::kCircuits: return from_signature(sig);
    case Representation::kPlucker:
      return from_plucker(coords_from_signature(sig));
    case Representation::kDualPair:
      return from_dual_pair(
          {sig, cocircuits_constructive(sig), sig.underlying()});
  }
  throw InvalidArgument("no representation");
}

CheckResult check_in_mode(const InstanceFile& f, bool strong) {
  switch (f.rep) {
    case Representation::kCircuits: {
      const Signature& sig = *f.circuits;
      if (auto r = check_signature(sig); !r) return r;
      return strong ? check_strong_circuits(sig) : check_weak_circuits(sig);
    }
    case Representation::kPlucker:
      return strong ? check_strong_qp(*f.plucker) : check_weak_qp(*f.plucker);
    case Representation::kDualPair: {
      const DualPair& dp = *f.dualpair;
      if (auto r = check_signature(dp.circuits, dp.matroid); !r) {
        return CheckResult::fail("circuits: " + r.witness);
      }
      if (auto r = check_signature(dp.cocircuits, dp.matroid.dual()); !r) {
        return CheckResult::fail("cocircuits: " + r.witness);
      }
      return check_dual_pair(dp, strong ? PairMode::kStrong : PairMode::kWeak);
    }
  }
  return CheckResult::fail("no representation");
}

Classification classify_file(const InstanceFile& f) {
  switch (f.rep) {
    case Representation::kCircuits: return classify(*f.circuits);
    case Representation::kPlucker: return classify(*f.plucker);
    case Representation::kDualPair: return classify(*f.dualpair);
  }
  return {};
}

int cmd_check(const Options& o, const InstanceFile& f, std::ostream& out) {
  if (o.mode == "auto") {
    const Classification c = classify_file(f);
    out << strength_name(c.strength) << "\n";
    if (c.strength == Strength::kInvalid) {
      out << "witness: " << c.witness << "\n";
      return kExitFailed;
    }
    return kExitOk;
  }
  const bool strong = o.mode == "strong";
  const CheckResult r = check_in_mode(f, strong);
  out << o.mode << ": " << (r ? "pass" : "fail") << "\n";
  if (!r) {
    out << "witness: " << r.witness << "\n";
    return kExitFailed;
  }
  return kExitOk;
}

int require_valid(const Classification& c, std::ostream& err) {
  if (c.strength != Strength::kInvalid) return kExitOk;
  err << "invalid: " << c.witness << "\n";
  return kExitFailed;
}

int cmd_convert(const Options& o, const InstanceFile& f, std::ostream& out,
                std::ostream& err) {
  const Representation to = parse_representation(o.to);
  const Classification c = classify_file(f);
  if (int code = require_valid(c, err)) return code;
  const TMatroid& tm = *c.matroid;
  InstanceFile result;
  switch (to) {
    case Representation::kCircuits: result = from_signature(tm.signature); break;
    case Representation::kPlucker: result = from_plucker(tm.coords); break;
    case Representation::kDualPair: result = from_dual_pair(tm.dual_pair()); break;
  }
  result.realization = f.realization;
  out << write_instance(result);
  return kExitOk;
}

int cmd_dual(const InstanceFile& f, std::ostream& out) {
  InstanceFile result;
  switch (f.rep) {
    case Representation::kCircuits:
      result = from_signature(cocircuits_constructive(*f.circuits));
      break;
    case Representation::kPlucker:
      result = from_plucker(dual_coords(*f.plucker));
      break;
    case Representation::kDualPair: {
      const DualPair& dp = *f.dualpair;
      result = from_dual_pair({dp.cocircuits, dp.circuits, dp.matroid.dual()});
      break;
    }
  }
  out << write_instance(result);
  return kExitOk;
}

int cmd_minor(const Options& o, const InstanceFile& f, std::ostream& out) {
  const Signature sig = circuits_of(f);
  const SupportMatroid free = SupportMatroid::free_matroid(sig.ground());
  const Subset del = free.subset_of(o.del);
  const Subset con = free.subset_of(o.con);
  if (del.intersects(con)) {
    throw InvalidArgument("--delete and --contract overlap");
  }
  out << write_instance(reexpress(f, minors(sig, del, con)));
  return kExitOk;
}

int cmd_rescale(const Options& o, const InstanceFile& f, std::ostream& out) {
  const Signature sig = circuits_of(f);
  const Tract& t = sig.tract();
  std::vector<GroupElement> rho;
  for (const auto& text : o.rho) {
    const TractValue v = t.parse(text);
    if (v.is_zero()) throw InvalidArgument("--rho entries must be nonzero");
    rho.push_back(v.element());
  }
  RescaleMode mode =
      sig.side() == Side::kLeft ? RescaleMode::kRight : RescaleMode::kLeft;
  if (o.rescale_mode == "left") mode = RescaleMode::kLeft;
  if (o.rescale_mode == "right") mode = RescaleMode::kRight;
  out << write_instance(reexpress(f, rescale(sig, rho, mode)));
  return kExitOk;
}

TractHom load_hom(const Options& o, const Tract& source, std::istream& in) {
  if (!o.hom.empty()) return make_hom(o.hom, source);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_all(o.hom_file, in));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed homomorphism file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("target") || !j.contains("table") ||
      !j["table"].is_array()) {
    throw ParseError("homomorphism file needs \"target\" and \"table\"");
  }
  const Tract target = tract_from_json(j["target"]);
  std::vector<std::pair<GroupElement, GroupElement>> table;
  for (const auto& rec : j["table"]) {
    if (!rec.is_object() || !rec.contains("from") || !rec.contains("to") ||
        !rec["from"].is_string() || !rec["to"].is_string()) {
      throw ParseError("homomorphism records are {\"from\": .., \"to\": ..}");
    }
    const TractValue a = source.parse(rec["from"].get<std::string>());
    const TractValue b = target.parse(rec["to"].get<std::string>());
    if (a.is_zero() || b.is_zero()) {
      throw InvalidArgument("homomorphism tables map nonzero elements");
    }
    table.emplace_back(a.element(), b.element());
  }
  return TractHom::from_table(source, target, table);
}

int cmd_pushforward(const Options& o, const InstanceFile& f, std::istream& in,
                    std::ostream& out) {
  const TractHom h = load_hom(o, f.tract(), in);
  InstanceFile result;
  switch (f.rep) {
    case Representation::kCircuits:
      result = from_signature(pushforward(h, *f.circuits));
      break;
    case Representation::kPlucker: {
      const PluckerMap& pm = *f.plucker;
      PluckerMap::Values values;
      for (const auto& [pair, g] : pm.values()) values.emplace(pair, h.apply(g));
      result = from_plucker(
          PluckerMap(pm.matroid(), h.target(), pm.side(), std::move(values)));
      break;
    }
    case Representation::kDualPair: {
      const DualPair& dp = *f.dualpair;
      result = from_dual_pair({pushforward(h, dp.circuits),
                               pushforward(h, dp.cocircuits), dp.matroid});
      break;
    }
  }
  out << write_instance(result);
  return kExitOk;
}

int cmd_classify(const InstanceFile& f, std::ostream& out) {
  const Classification c = classify_file(f);
  out << strength_name(c.strength) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"Checks, converts and transforms matroids over tracts.",
               "skewmat"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", o.file, "instance file, - for stdin")->required();
  };
  CLI::App* check = app.add_subcommand("check", "check the axioms");
  add_file(check);
  check->add_option("--mode", o.mode, "weak, strong or auto")
      ->check(CLI::IsMember({"weak", "strong", "auto"}));
  check->add_option("--seed", o.seed, "seed for sampled checks");

  CLI::App* convert = app.add_subcommand("convert", "change representation");
  add_file(convert);
  convert->add_option("--to", o.to, "circuits, plucker or dualpair")
      ->required()
      ->check(CLI::IsMember({"circuits", "plucker", "dualpair"}));

  CLI::App* dual = app.add_subcommand("dual", "dual matroid");
  add_file(dual);

  CLI::App* minor = app.add_subcommand("minor", "delete and contract");
  add_file(minor);
  minor->add_option("--delete", o.del, "labels to delete")->delimiter(',');
  minor->add_option("--contract", o.con, "labels to contract")->delimiter(',');

  CLI::App* resc = app.add_subcommand("rescale", "rescale by a vector");
  add_file(resc);
  resc->add_option("--rho", o.rho, "one nonzero value per element")
      ->required()
      ->delimiter(',');
  resc->add_option("--mode", o.rescale_mode, "left or right")
      ->check(CLI::IsMember({"left", "right"}));

  CLI::App* push = app.add_subcommand("pushforward", "apply a homomorphism");
  add_file(push);
  auto* hom = push->add_option("--hom", o.hom,
                               "to_krasner, identity or "
                               "tropical_to_ultratriangle");
  auto* hom_file =
      push->add_option("--hom-file", o.hom_file, "JSON element table");
  hom->excludes(hom_file);
  hom_file->excludes(hom);

  CLI::App* cls = app.add_subcommand("classify", "invalid, weak or strong");
  add_file(cls);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }
  if (push->parsed() && o.hom.empty() && o.hom_file.empty()) {
    err << "pushforward needs --hom or --hom-file\n";
    return kExitInvalidInput;
  }

  try {
    const InstanceFile f = parse_instance(read_all(o.file, in));
    if (check->parsed()) return cmd_check(o, f, out);
    if (convert->parsed()) return cmd_convert(o, f, out, err);
    if (dual->parsed()) return cmd_dual(f, out);
    if (minor->parsed()) return cmd_minor(o, f, out);
    if (resc->parsed()) return cmd_rescale(o, f, out);
    if (push->parsed()) return cmd_pushforward(o, f, in, out);
    if (cls->parsed()) return cmd_classify(f, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const Error& e) {
    err << "failed: " << e.what() << "\n";
    return kExitFailed;
  }
  return kExitInvalidInput;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  return run_cli(args, std::cin, out, err);
}

}  // namespace skewmat::cli
