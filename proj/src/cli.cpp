#include "quivermod/cli.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "quivermod/instance_file.hpp"

namespace quivermod {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string side = "both";
  std::string out;
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::string fault = "none";
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json big(const BigInt& n) {
  if (n <= std::numeric_limits<std::uint64_t>::max()) return n.convert_to<std::uint64_t>();
  return n.str();
}

Json failures_json(const std::vector<RoundTripFailure>& failures) {
  Json arr = Json::array();
  for (const auto& f : failures) arr.push_back({{"side", f.side}, {"reason", f.reason}, {"witness", f.witness}});
  return arr;
}

template <class S>
Json instance_json(const InstanceFile& f, const BuiltAlgebra<S>& built, const Instance<S>& inst) {
  Json j;
  j["description"] = inst.describe();
  j["vertices"] = f.vertices;
  j["algebra"] = algebra_kind_name(f.algebra);
  j["truncation"] = f.algebra == AlgebraKind::Explicit ? Json(nullptr) : Json(built.truncation);
  j["field"] = f.field.name();
  j["d"] = f.d.entries();
  j["v"] = f.v.entries();
  j["nilpotent"] = f.nilpotent;
  j["dim_algebra"] = built.algebra->dimension();
  j["dim_A_D"] = inst.module->dims().entries();
  return j;
}

void write_json(const Json& j, const std::string& path) {
  if (path.empty()) return;
  std::ofstream os(path);
  if (!os) throw UsageError("cannot write '" + path + "'");
  os << j.dump(2) << "\n";
}

Fault parse_fault(const std::string& name) {
  if (name == "none") return Fault::None;
  if (name == "drop-framing") return Fault::DropFraming;
  throw UsageError("unknown fault '" + name + "'");
}

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << "\n";
}

template <class S>
int cmd_check(const InstanceFile& f, std::ostream& out) {
  const auto built = build_algebra<S>(f);
  const auto& a = *built.algebra;
  const auto& vs = a.vertices();
  out << "algebra: " << algebra_kind_name(f.algebra);
  if (f.algebra != AlgebraKind::Explicit) out << " (truncation " << built.truncation << ")";
  out << " over " << f.field.name() << "\n";
  out << "dim A = " << a.dimension() << "\n";
  out << "dim e_i A e_j (row i, column j):\n";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    out << "  " << vs.label(i) << ":";
    for (std::size_t j = 0; j < vs.size(); ++j) out << " " << bigraded_component(a, i, j).size();
    out << "\n";
  }
  std::vector<int> by_degree(static_cast<std::size_t>(a.max_degree()) + 1, 0);
  for (const auto& b : a.basis()) ++by_degree[static_cast<std::size_t>(b.degree)];
  out << "dimension by degree:";
  for (auto n : by_degree) out << " " << n;
  out << "\n";

  const auto validation = validate_algebra(a);
  if (!validation.ok()) {
    out << "INVALID: " << validation.failures.size() << " axiom failure(s)\n";
    for (const auto& fl : validation.failures) {
      out << "  " << axiom_name(fl.axiom) << " [";
      for (std::size_t k = 0; k < fl.witness.size(); ++k) out << (k ? " " : "") << a.element(fl.witness[k]).label;
      out << "] " << fl.detail << "\n";
    }
    return kExitVerificationFailed;
  }
  const auto inst = build_instance(f, built);
  out << "dim A_D = " << inst.module->dims().str() << "\n";
  out << "valid\n";
  return kExitOk;
}

std::string count_line(const VerificationReport& r) {
  std::ostringstream s;
  if (r.rep_side) s << "rep: " << r.count_rep_orbits;
  if (r.rep_side && r.gr_side) s << "  ";
  if (r.gr_side) s << "gr: " << r.count_gr;
  s << "  " << (r.counts_agree() ? "AGREE" : "DISAGREE");
  return s.str();
}

Json report_json(const char* mode, const InstanceFile& f, const BuiltAlgebra<Fp>& built, const Instance<Fp>& inst,
                 const VerificationReport& r) {
  Json j;
  j["mode"] = mode;
  j["instance"] = instance_json(f, built, inst);
  j["warnings"] = r.warnings;
  j["sides"] = r.rep_side && r.gr_side ? "both" : (r.rep_side ? "rep" : "gr");
  j["count_gr"] = r.gr_side ? Json(r.count_gr) : Json(nullptr);
  if (r.rep_side) {
    j["count_rep"] = {{"stable_points", r.stable_points},
                      {"gauge_group_order", big(r.gauge_order)},
                      {"orbit_classes", r.count_rep_orbits},
                      {"stable_over_gauge", r.count_rep_quotient ? big(*r.count_rep_quotient) : Json(nullptr)}};
  } else {
    j["count_rep"] = nullptr;
  }
  j["roundtrip"] = {{"checked", r.roundtrip_checked}, {"points", r.roundtrips}};
  j["failures"] = failures_json(r.failures);
  j["counts_agree"] = r.counts_agree();
  j["bijection_ok"] = r.bijection_ok();
  return j;
}

int cmd_count(const InstanceFile& f, const Options& o, std::ostream& out, std::ostream& err) {
  if (!f.field.is_finite()) throw UsageError("count requires a finite field (field: F<p>)");
  const auto built = build_algebra<Fp>(f);
  const auto inst = build_instance(f, built);
  print_warnings(inst.warnings, err);
  VerifyOptions vo;
  vo.roundtrip = false;
  vo.gr_side = o.side != "rep";
  vo.rep_side = o.side != "gr";
  vo.enumeration = {o.budget, o.threads};
  const auto r = run_verification(inst, vo);
  out << "instance: " << r.instance << "\n";
  if (r.rep_side) {
    out << "stable framed points: " << r.stable_points << "  |G_v| = " << r.gauge_order.str()
        << "  orbit classes: " << r.count_rep_orbits
        << "  stable/|G_v|: " << (r.count_rep_quotient ? r.count_rep_quotient->str() : "n/a") << "\n";
  }
  out << count_line(r) << "\n";
  for (const auto& fl : r.failures) out << "FAIL [" << fl.side << "] " << fl.reason << "\n  " << fl.witness << "\n";
  write_json(report_json("count", f, built, inst, r), o.out);
  return r.counts_agree() && r.failures.empty() ? kExitOk : kExitVerificationFailed;
}

int verify_exhaustive(const InstanceFile& f, const Options& o, std::ostream& out, std::ostream& err) {
  const auto built = build_algebra<Fp>(f);
  const auto inst = build_instance(f, built);
  print_warnings(inst.warnings, err);
  VerifyOptions vo;
  vo.fault = parse_fault(o.fault);
  vo.enumeration = {o.budget, o.threads};
  const auto r = run_verification(inst, vo);
  out << "instance: " << r.instance << "\n";
  out << count_line(r) << "\n";
  out << "round trips: " << r.roundtrips << " checked, " << r.failures.size() << " failure(s)\n";
  for (const auto& fl : r.failures) out << "FAIL [" << fl.side << "] " << fl.reason << "\n  " << fl.witness << "\n";
  out << (r.bijection_ok() ? "OK: the correspondence is a bijection on this instance" : "FAILED") << "\n";
  write_json(report_json("verify", f, built, inst, r), o.out);
  return r.bijection_ok() ? kExitOk : kExitVerificationFailed;
}

int verify_spot_checks(const InstanceFile& f, const Options& o, std::ostream& out, std::ostream& err) {
  const auto built = build_algebra<Rational>(f);
  const auto inst = build_instance(f, built);
  print_warnings(inst.warnings, err);
  const auto r = spot_check_roundtrips(inst, o.samples, o.seed, parse_fault(o.fault));
  out << "instance: " << inst.describe() << "\n";
  out << "spot checks over " << f.field.name() << ": " << r.sampled << "/" << r.requested << " random stable points, seed "
      << o.seed << ", " << r.failures.size() << " failure(s)\n";
  for (const auto& fl : r.failures) out << "FAIL [" << fl.side << "] " << fl.reason << "\n  " << fl.witness << "\n";
  out << (r.ok() ? "OK" : "FAILED") << "\n";
  Json j;
  j["mode"] = "spot-check";
  j["instance"] = instance_json(f, built, inst);
  j["warnings"] = inst.warnings;
  j["spot_check"] = {{"seed", o.seed}, {"requested", r.requested}, {"sampled", r.sampled}};
  j["failures"] = failures_json(r.failures);
  j["ok"] = r.ok();
  write_json(j, o.out);
  return r.ok() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Framed representations and quotient-module Grassmannians of finite-dimensional algebras"};
  app.require_subcommand(1);
  Options o;

  auto add_file = [&](CLI::App* sub) { sub->add_option("file", o.file, "instance file")->required(); };
  auto add_enumeration = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "write a JSON report to this path");
    sub->add_option("--budget", o.budget, "maximum search-space size per enumeration")->capture_default_str();
    sub->add_option("--threads", o.threads, "worker threads for enumeration")->capture_default_str()
        ->check(CLI::Range(1u, 1024u));
  };

  auto* check = app.add_subcommand("check", "build the algebra and validate its axioms");
  add_file(check);

  auto* count = app.add_subcommand("count", "count points on either side of the correspondence");
  add_file(count);
  add_enumeration(count);
  count->add_option("--side", o.side, "rep, gr or both")->check(CLI::IsMember({"rep", "gr", "both"}))->capture_default_str();

  auto* verify = app.add_subcommand("verify", "round-trip every point and compare counts (spot checks over Q)");
  add_file(verify);
  add_enumeration(verify);
  verify->add_option("--side", o.side, "only both is supported")->check(CLI::IsMember({"both"}));
  verify->add_option("--seed", o.seed, "random seed for spot checks over Q")->capture_default_str();
  verify->add_option("--samples", o.samples, "number of spot checks over Q")->capture_default_str();
  verify->add_option("--inject-fault", o.fault, "corrupt the correspondence (testing)")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  InstanceFile f;
  try {
    f = parse_instance_file(o.file);
  } catch (const ParseError& e) {
    err << o.file << ":";
    if (e.line()) err << e.line() << ":" << e.column() << ":";
    err << " error: " << e.message() << "\n";
    return kExitUsage;
  }

  try {
    if (check->parsed()) return f.field.is_finite() ? cmd_check<Fp>(f, out) : cmd_check<Rational>(f, out);
    if (count->parsed()) return cmd_count(f, o, out, err);
    return f.field.is_finite() ? verify_exhaustive(f, o, out, err) : verify_spot_checks(f, o, out, err);
  } catch (const ParseError& e) {
    err << o.file << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace quivermod
