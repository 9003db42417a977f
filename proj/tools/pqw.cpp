#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pqw/families.hpp"
#include "pqw/fermat.hpp"
#include "pqw/pi1.hpp"
#include "pqw/report.hpp"
#include "pqw/spec_io.hpp"

namespace {

using nlohmann::json;
using namespace pqw;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitUndetermined = 3;
constexpr int kExitInternal = 4;

struct CommonArgs {
  std::string json_path;
  bool no_timing = false;
  std::string limits_str;
};

EnumerationLimits resolve_limits(const CommonArgs& args,
                                 const std::optional<EnumerationLimits>& from_file) {
  EnumerationLimits lim;
  if (from_file) lim = *from_file;
  if (const char* env = std::getenv("PQW_LIMITS")) lim = parse_limits(env, lim);
  if (!args.limits_str.empty()) lim = parse_limits(args.limits_str, lim);
  return lim;
}

void write_report(const CommonArgs& args, const json& report) {
  if (args.json_path.empty()) return;
  std::ofstream out(args.json_path);
  if (!out) throw ValidationError("cannot write '" + args.json_path + "'");
  out << report.dump(2) << '\n';
}

double ms_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_validate(const std::string& path) {
  SpecDocument doc = load_spec_document(path);
  std::cout << "valid: " << doc.spec.label << " with " << doc.spec.n() << " factor(s) over group of order "
            << doc.spec.group.order() << "\n";
  for (const Factor& f : doc.spec.factors) {
    std::cout << "  factor " << f.branch.to_string() << " genus " << f.genus << "\n";
  }
  return kExitOk;
}

int cmd_invariants(const std::string& path, const CommonArgs& args) {
  auto t0 = std::chrono::steady_clock::now();
  SpecDocument doc = load_spec_document(path);
  EnumerationLimits lim = resolve_limits(args, doc.limits);
  ReportOptions ropt{!args.no_timing};

  Census census = singular_census(doc.spec);
  json blocks;
  blocks["spec"] = spec_echo_json(doc.spec);
  blocks["invariants"] = invariants_json(doc.spec, census);
  if (doc.subgroup) {
    EtaleCover cover = etale_intermediate_cover(doc.spec, *doc.subgroup);
    blocks["cover"] = cover_json(cover);
  }
  json report = make_report("invariants", std::move(blocks), lim, ropt, ms_since(t0));
  write_report(args, report);

  std::cout << doc.spec.label << ": h1(Theta) = " << h1_theta(doc.spec) << ", b1 = "
            << betti_b1(doc.spec) << ", singular points = " << census.singular_points << " ("
            << census.marked_tuples << " marked tuples)\n";
  if (doc.subgroup) {
    const json& c = report["cover"];
    std::cout << "cover: degree " << c["degree"] << ", "
              << (c["unramified"].get<bool>() ? "unramified" : "ramified") << "\n";
  }
  return kExitOk;
}

int cmd_pi1(const std::string& path, const CommonArgs& args) {
  auto t0 = std::chrono::steady_clock::now();
  SpecDocument doc = load_spec_document(path);
  Pi1Options opt;
  opt.limits = resolve_limits(args, doc.limits);
  Pi1Result res = armstrong_pi1(doc.spec, opt);
  ReportOptions ropt{!args.no_timing};

  json blocks;
  blocks["spec"] = spec_echo_json(doc.spec);
  blocks["pi1"] = pi1_json(res, ropt);
  json report = make_report("pi1", std::move(blocks), opt.limits, ropt, ms_since(t0));
  write_report(args, report);

  if (res.status == OrderStatus::Certified) {
    std::cout << doc.spec.label << ": pi1 order " << res.order;
    if (res.certified_abelian) std::cout << ", isomorphic to " << res.isomorphism;
    std::cout << "\n";
    return kExitOk;
  }
  std::cout << doc.spec.label << ": pi1 undetermined (" << res.diag.undetermined_reason << ")";
  if (res.abelian) std::cout << "; H1 = " << res.abelian->to_string();
  std::cout << "\n";
  return kExitUndetermined;
}

struct Conformance {
  json items = json::array();
  bool any_fail = false;
  bool any_undetermined = false;

  void add(const std::string& name, const std::string& status, const json& expected,
           const json& got) {
    json item;
    item["check"] = name;
    item["status"] = status;
    item["expected"] = expected;
    item["got"] = got;
    items.push_back(item);
    if (status == "fail") any_fail = true;
    if (status == "undetermined") any_undetermined = true;
    std::cout << "  [" << (status == "pass" ? "PASS" : status == "fail" ? "FAIL" : "UNDET")
              << "] " << name << ": expected " << expected.dump() << ", got " << got.dump()
              << "\n";
  }
  void check_eq(const std::string& name, const json& expected, const json& got) {
    add(name, expected == got ? "pass" : "fail", expected, got);
  }
};

int cmd_paper(char family, int n, const CommonArgs& args) {
  auto t0 = std::chrono::steady_clock::now();
  check_input(n >= 2, "paper families start at n = 2");
  FamilyExpectations exp = expected_for(family, n);
  ProductQuotientSpec spec = family == 'X' ? x_family(n) : y_family(n);
  Pi1Options opt;
  opt.limits = resolve_limits(args, std::nullopt);
  ReportOptions ropt{!args.no_timing};

  std::cout << spec.label;
  if (exp.beyond_verified) std::cout << " [beyond paper-verified range n=2..5]";
  std::cout << "\n";

  Census census = singular_census(spec);
  Pi1Result pi1 = armstrong_pi1(spec, opt);

  Conformance conf;
  conf.check_eq("h1_theta", exp.h1_theta, h1_theta(spec));
  conf.check_eq("b1", exp.b1, betti_b1(spec));
  conf.check_eq("marked_tuples", exp.marked_tuples, census.marked_tuples);
  conf.check_eq("singular_points", exp.singular_points, census.singular_points);
  conf.check_eq("all_half_type", true, census.all_half_type);
  json blocks;
  if (pi1.status == OrderStatus::Certified) {
    conf.check_eq("pi1_order", exp.pi1_order, pi1.order);
    AbelianInvariants want;
    want.torsion.assign(std::size_t(exp.pi1_rank), 2);
    conf.check_eq("pi1_isomorphism", want.to_string(),
                  pi1.certified_abelian ? pi1.isomorphism : "uncertified");
    if (family == 'X') {
      UniversalCoverReport cover = universal_cover_report(spec, pi1, census);
      conf.check_eq("cover_singularities", *exp.cover_singularities, cover.cover_singularities);
      blocks["universal_cover"] = universal_cover_json(cover);
    }
  } else {
    conf.add("pi1_order", "undetermined", exp.pi1_order, nullptr);
  }

  std::string verdict = conf.any_fail ? "FAIL" : conf.any_undetermined ? "UNDETERMINED" : "PASS";
  std::cout << "conformance: " << verdict << "\n";

  blocks["spec"] = spec_echo_json(spec);
  blocks["spec"]["vector_provenance"] =
      "canonical vector derived from the fixed-point table stabilizers";
  blocks["invariants"] = invariants_json(spec, census);
  blocks["pi1"] = pi1_json(pi1, ropt);
  blocks["conformance"]["items"] = conf.items;
  blocks["conformance"]["verdict"] = verdict;
  blocks["conformance"]["beyond_verified_range"] = exp.beyond_verified;
  json report = make_report("paper", std::move(blocks), opt.limits, ropt, ms_since(t0));
  write_report(args, report);

  if (conf.any_fail) return kExitInternal;
  if (conf.any_undetermined) return kExitUndetermined;
  return kExitOk;
}

int cmd_fermat_verify(const std::string& subgroup_csv, const CommonArgs& args) {
  auto t0 = std::chrono::steady_clock::now();
  FiniteGroup g = fermat_group();
  std::vector<int> subgroup;
  if (!subgroup_csv.empty()) {
    std::string rest = subgroup_csv;
    // Labels look like "(2,0)"; split on commas between ')','('.
    std::size_t pos = 0;
    while (pos < rest.size()) {
      std::size_t close = rest.find(')', pos);
      check_input(close != std::string::npos, "bad subgroup label list");
      std::string label = rest.substr(pos, close - pos + 1);
      auto e = g.element_by_label(label);
      check_input(e.has_value(), "unknown element label '" + label + "'");
      subgroup.push_back(*e);
      pos = close + 1;
      if (pos < rest.size() && rest[pos] == ',') ++pos;
    }
  }

  FermatReport rep = verify_fixed_point_table(g, subgroup);
  std::vector<std::string> bij = marked_point_bijection_failures(g, x_family(1));
  ReportOptions ropt{!args.no_timing};

  json blocks;
  blocks["fermat"] = fermat_json(rep);
  blocks["abstract_coordinate_bijection"] =
      bij.empty() ? json("pass") : json(bij);
  json report = make_report("fermat-verify", std::move(blocks), EnumerationLimits{}, ropt,
                            ms_since(t0));
  write_report(args, report);

  std::cout << "fermat table: " << (rep.pass ? "PASS" : "FAIL") << " (" << rep.marked_count
            << " marked points, " << rep.orbits.size() << " orbits";
  std::cout << ", subgroup orbit lengths:";
  for (int l : rep.subgroup_orbit_lengths) std::cout << ' ' << l;
  std::cout << ")\n";
  for (const std::string& f : rep.failures) std::cout << "  failure: " << f << "\n";
  std::cout << "abstract/coordinate bijection: " << (bij.empty() ? "PASS" : "FAIL") << "\n";
  for (const std::string& f : bij) std::cout << "  failure: " << f << "\n";
  return rep.pass && bij.empty() ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"product-quotient workbench"};
  app.require_subcommand(1);

  CommonArgs common;
  std::string path;
  std::string family = "X";
  int n = 3;
  std::string subgroup_csv;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--json", common.json_path, "write a JSON report to this path");
    cmd->add_flag("--no-timing", common.no_timing, "omit timing fields for byte-stable output");
    cmd->add_option("--limits", common.limits_str,
                    "max-cosets=K,max-relators=K[,max-definitions=K]");
  };

  CLI::App* validate = app.add_subcommand("validate", "validate a spec file");
  validate->add_option("path", path)->required();

  CLI::App* invariants = app.add_subcommand("invariants", "census, h1(Theta), b1, kappa flags");
  invariants->add_option("path", path)->required();
  add_common(invariants);

  CLI::App* pi1 = app.add_subcommand("pi1", "fundamental group of the quotient");
  pi1->add_option("path", path)->required();
  add_common(pi1);

  CLI::App* paper = app.add_subcommand("paper", "reproduce a named example end to end");
  paper->add_option("--family", family, "X or Y")->required()->check(CLI::IsMember({"X", "Y"}));
  paper->add_option("--n", n, "number of factors")->required();
  add_common(paper);

  CLI::App* fermat = app.add_subcommand("fermat-verify", "exact Fermat quartic fixed-point table");
  fermat->add_option("--subgroup", subgroup_csv, "element labels, e.g. (2,0),(0,2)");
  add_common(fermat);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (validate->parsed()) return cmd_validate(path);
    if (invariants->parsed()) return cmd_invariants(path, common);
    if (pi1->parsed()) return cmd_pi1(path, common);
    if (paper->parsed()) return cmd_paper(family[0], n, common);
    if (fermat->parsed()) return cmd_fermat_verify(subgroup_csv, common);
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const LimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitUndetermined;
  } catch (const InternalError& e) {
    std::cerr << "internal assertion failure: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitValidation;
}
