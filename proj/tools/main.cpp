#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "qsuper/contraction.hpp"
#include "qsuper/errors.hpp"
#include "qsuper/fixtures.hpp"
#include "qsuper/hopfstar.hpp"
#include "qsuper/report.hpp"
#include "qsuper/reps.hpp"

using namespace qsuper;

namespace {

struct Common {
  std::string report_path;
  std::string format = "text";
  std::string mode = "both";
  int order = 6;
  bool strict = false;
  bool no_timing = false;
  unsigned jobs = 1;

  SuiteOptions options() const { return {parse_mode_selection(mode), order, jobs}; }
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("--report", c.report_path, "write the JSON report to this path");
  app->add_option("--format", c.format, "stdout format")->check(CLI::IsMember({"json", "text"}));
  app->add_option("--mode", c.mode, "tensor products for mode-dependent checks")
      ->check(CLI::IsMember({"graded", "ungraded", "both"}));
  app->add_option("--order", c.order, "truncation order of the exponential realization");
  app->add_flag("--strict", c.strict, "adjudication failures also fail the run");
  app->add_flag("--no-timing", c.no_timing, "omit wall times from JSON output");
  app->add_option("--jobs", c.jobs, "checks run concurrently")->check(CLI::PositiveNumber);
}

int emit(const VerificationReport& rep, const Common& c) {
  if (!c.report_path.empty()) {
    std::ofstream out(c.report_path);
    if (!out) throw FixtureMissing("cannot write report to " + c.report_path);
    out << rep.to_json(!c.no_timing).dump(2) << "\n";
  }
  if (c.format == "json")
    std::cout << rep.to_json(!c.no_timing).dump(2) << "\n";
  else
    std::cout << rep.summary();
  return rep.exit_status(c.strict);
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

/// Checks of `suite` whose id starts with one of `prefixes`.
std::vector<CheckDef> select(const std::string& suite, const std::vector<std::string>& prefixes, const SuiteOptions& o) {
  std::vector<CheckDef> out;
  for (auto& d : suite_checks(suite, o))
    for (const auto& p : prefixes)
      if (starts_with(d.id, p)) {
        out.push_back(std::move(d));
        break;
      }
  if (out.empty()) throw UnknownPreset("no checks match the request");
  return out;
}

std::string matrix_key(const std::string& m) {
  if (m == "rhat_pq" || m == "pq") return "pq";
  if (m == "rhat_hh" || m == "hh") return "hh";
  if (m == "r_h") return "r_h";
  if (m == "r_hprime") return "r_hprime";
  throw UnknownPreset("unknown matrix fixture '" + m + "'");
}

std::vector<std::string> verify_prefixes(const std::string& what, const std::string& matrix, const std::string& algebra,
                                         const std::string& example, std::string& suite) {
  if (what == "braid" || what == "ybe") {
    suite = "rmatrix";
    return {"rmatrix." + what + "." + matrix_key(matrix) + "."};
  }
  if (what == "involutive" || what == "projectors" || what == "compact" || what == "kernel" || what == "decompose") {
    suite = "rmatrix";
    if (what == "compact" && matrix_key(matrix) == "pq") return {"rmatrix.compact.pq."};
    if (what == "kernel" || what == "decompose") return {"rmatrix." + what};
    return {"rmatrix." + what + "." + matrix_key(matrix)};
  }
  if (what == "frt") return suite = "frt", std::vector<std::string>{"frt.frt_vs_"};
  if (what == "coaction") return suite = "frt", std::vector<std::string>{"frt.coaction_vs_fixture"};
  if (what == "bialgebra") return suite = "frt", std::vector<std::string>{"frt.bialgebra"};
  if (what == "comodule") return suite = "frt", std::vector<std::string>{"frt.comodule."};
  if (what == "hopf") {
    const std::string a = resolve_alias("hopf", algebra.empty() ? example : algebra);
    if (a == "Lie") return suite = "liesuper", std::vector<std::string>{"liesuper.primitive_hopf"};
    if (a.empty() || a == "FAq12") return suite = "hopf", std::vector<std::string>{"hopf."};
    throw UnknownPreset("no costructure for '" + a + "'");
  }
  if (what == "star") {
    suite = "star";
    const std::string key = algebra.empty() ? example : algebra;
    if (key.empty()) return {"star.involution."};
    const std::string a = resolve_alias("star", key);
    std::string id;
    for (char ch : a) id += ch == '\'' ? 'p' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    return {"star.involution." + id};
  }
  if (what == "liesuper") return suite = "liesuper", std::vector<std::string>{"liesuper."};
  if (what == "reps") {
    suite = "reps";
    if (example.empty()) return {"reps."};
    return {"reps." + representation(example).name + "."};
  }
  throw UnknownPreset("unknown verification '" + what + "'");
}

void print_relations(const std::string& title, const std::vector<Relation>& rels) {
  std::cout << title << "\n";
  for (const auto& r : rels) std::cout << "  " << r.poly.str() << " = 0\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of two-parameter quantum superspaces, their R-matrices and Hopf structures"};
  app.require_subcommand(1);
  Common common;

  std::string suite = "all";
  auto* run = app.add_subcommand("run", "run a verification suite");
  run->add_option("suite", suite, "suite name")->check(CLI::IsMember(suite_names()));
  add_common(run, common);

  std::string what, matrix = "rhat_hh", algebra, example;
  auto* verify = app.add_subcommand("verify", "run the checks of one construction");
  verify->add_option("what", what, "braid|ybe|involutive|projectors|compact|kernel|decompose|frt|coaction|bialgebra|"
                                   "comodule|hopf|star|liesuper|reps")
      ->required();
  verify->add_option("--matrix", matrix, "rhat_pq, rhat_hh, r_h or r_hprime");
  verify->add_option("--algebra", algebra, "algebra of a Hopf or star structure");
  verify->add_option("--example", example, "example number or name");
  add_common(verify, common);

  std::string route, g = "full";
  auto* contract_cmd = app.add_subcommand("contract", "apply a basis change and take the limit (p,q) -> (1,1)");
  contract_cmd->add_option("route", route, "superspace, exterior or rmatrix")->required();
  contract_cmd->add_option("--g", g, "basis change: full, h-only or hprime-only");
  add_common(contract_cmd, common);

  std::string derive_what, derive_g = "full";
  bool first_order = false;
  auto* derive = app.add_subcommand("derive", "derive a structure through a basis change");
  derive->add_option("what", derive_what, "star")->required()->check(CLI::IsMember({"star"}));
  derive->add_option("--g", derive_g, "induction: h-only, hprime-only or full");
  derive->add_flag("--first-order", first_order, "drop components containing every odd parameter of g");
  add_common(derive, common);

  std::string fixtures_action;
  auto* fixtures = app.add_subcommand("fixtures", "fixture integrity");
  fixtures->add_option("action", fixtures_action, "verify or rehash")->required()->check(CLI::IsMember({"verify", "rehash"}));

  std::string preset_name;
  auto* presets = app.add_subcommand("presets", "list presentations or print one");
  presets->add_option("name", preset_name, "preset name");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return emit(run_suite(suite, common.options()), common);

    if (*verify) {
      std::string s;
      const auto prefixes = verify_prefixes(what, matrix, algebra, example, s);
      return emit(run_checks(s, select(s, prefixes, common.options()), common.options()), common);
    }

    if (*contract_cmd) {
      const std::string r = resolve_alias("contract", route);
      if (r == "rmatrix") {
        if (g != "full") throw UnknownPreset("the R-matrix contraction uses the full basis change");
        return emit(run_checks("contraction", select("contraction", {"contraction.rmatrix."}, common.options()),
                               common.options()),
                    common);
      }
      if (g != "full") {
        const ContractionResult res = contract(r, g);
        print_relations("transformed relations:", res.prelimit);
        print_relations("at (p,q) = (1,1):", res.limit);
        fmt::print("limit against {}: {}\n", contraction_route(r).limit_target,
                   res.limit_match.pass ? "equal" : res.limit_match.witness);
        return 0;
      }
      const ContractionResult res = contract(r, g);
      if (common.format == "text") {
        print_relations("transformed relations:", res.prelimit);
        print_relations("at (p,q) = (1,1):", res.limit);
      }
      return emit(run_checks("contraction", select("contraction", {"contraction." + r + "."}, common.options()),
                             common.options()),
                  common);
    }

    if (*derive) {
      const std::string name = resolve_alias("induce", derive_g);
      if (common.format == "text") {
        try {
          const InducedStar s = induce_star(name, first_order);
          for (const auto& [gen, p] : s.generic) fmt::print("generic {}* = {}\n", generator_name(gen), p.str());
          for (const auto& [gen, p] : s.induced.images) fmt::print("induced {}* = {}\n", generator_name(gen), p.str());
        } catch (const ConstraintUnsatisfied& e) {
          fmt::print("no induced star: {}\n", e.what());
        }
      }
      const std::string id = "star.induce." + name + (first_order ? ".first_order" : "");
      std::vector<CheckDef> defs;
      for (auto& d : suite_checks("star", common.options()))
        if (d.id == id || (!first_order && d.id == id + ".pre_constraint")) defs.push_back(std::move(d));
      if (defs.empty()) throw UnknownPreset("no induction check '" + id + "'");
      return emit(run_checks("star", defs, common.options()), common);
    }

    if (*fixtures) {
      const FixtureStore& store = fixture_store();
      if (fixtures_action == "rehash") {
        store.rehash();
        fmt::print("manifest rewritten for {} files\n", store.manifest().size());
        return 0;
      }
      const auto bad = store.verify_all();
      for (const auto& [file, digest] : store.manifest())
        fmt::print("{} {} {}\n", std::find(bad.begin(), bad.end(), file) == bad.end() ? "ok " : "BAD", digest, file);
      for (const auto& f : bad)
        if (!store.manifest().count(f)) fmt::print("BAD {:64} {}\n", "(unlisted)", f);
      return bad.empty() ? 0 : 1;
    }

    if (*presets) {
      if (preset_name.empty()) {
        for (const auto& n : preset_names()) {
          const Presentation& p = preset(n);
          fmt::print("{:10} {} generators, {} relations\n", n, p.generators().size(), p.relations().size());
        }
        return 0;
      }
      std::cout << presentation_to_json(preset(preset_name)).dump(2) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
