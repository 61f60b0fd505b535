#include "doctest.h"

#include "qsuper/errors.hpp"
#include "qsuper/report.hpp"

#include <set>

using namespace qsuper;

TEST_CASE("every check of every suite is cited and classified") {
  std::set<std::string> ids;
  for (const auto& s : suite_names()) {
    if (s == "all") continue;
    for (const auto& d : suite_checks(s, {})) {
      CHECK_MESSAGE(ids.insert(d.id).second, "duplicate id " << d.id);
      CHECK_MESSAGE(d.id.rfind(s == "hopf" ? "hopf." : s + ".", 0) == 0, d.id);
    }
  }
  CHECK(ids.size() >= 40);
  const VerificationReport r = run_suite("liesuper");
  for (const auto& c : r.checks) {
    CHECK_FALSE(c.cite.empty());
    CHECK(c.verdict != Verdict::Indeterminate);
  }
  CHECK_THROWS_AS(suite_checks("nothing", {}), UnknownPreset);
}

TEST_CASE("an uncited check is refused") {
  const std::vector<CheckDef> defs = {{"made.up.check", [] { return Outcome::ok(); }}};
  CHECK_THROWS_AS(run_checks("rmatrix", defs, {}), FixtureMissing);
}

TEST_CASE("reports are deterministic across worker counts") {
  SuiteOptions one, four;
  four.jobs = 4;
  for (const char* s : {"rmatrix", "star", "reps"}) {
    const std::string a = run_suite(s, one).to_json(false).dump();
    const std::string b = run_suite(s, four).to_json(false).dump();
    CHECK_MESSAGE(a == b, s);
    CHECK(a.find("wall_seconds") == std::string::npos);
  }
}

TEST_CASE("exit status contract") {
  VerificationReport r;
  r.checks.push_back({"a", "c", CheckKind::PaperAsserted, Verdict::Pass, "", {}, 0});
  r.checks.push_back({"b", "c", CheckKind::Adjudication, Verdict::Fail, "w", {}, 0});
  CHECK(r.exit_status(false) == 0);
  CHECK(r.exit_status(true) != 0);
  r.checks[0].verdict = Verdict::Fail;
  CHECK(r.exit_status(false) != 0);
  r.checks[0].verdict = Verdict::Indeterminate;
  CHECK(r.exit_status(false) != 0);
}

TEST_CASE("report json layout") {
  const VerificationReport r = run_suite("liesuper");
  const Json j = r.to_json();
  CHECK(j.at("suite") == "liesuper");
  CHECK(j.at("engine_version") == engine_version());
  CHECK(j.at("fixture_hashes").size() > 0);
  REQUIRE(j.at("checks").size() == r.checks.size());
  const Json& c = j.at("checks")[0];
  for (const char* k : {"id", "cite", "kind", "verdict", "witness", "notes", "wall_seconds"}) CHECK_MESSAGE(c.contains(k), k);
  CHECK(r.find("liesuper.exp") != nullptr);
  CHECK(r.find("liesuper.none") == nullptr);
}

TEST_CASE("aliases resolve through the fixture") {
  CHECK(resolve_alias("star", "7.3") == "Ah12");
  CHECK(resolve_alias("star", "Ah12") == "Ah12");
}
