#pragma once

// Verification suites and their machine-readable reports. Every check id is
// listed in checks.json with one citation and a classification; only
// paper-asserted checks gate the exit status unless the run is strict.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qsuper/fixtures.hpp"
#include "qsuper/graded_matrix.hpp"
#include "qsuper/outcome.hpp"

namespace qsuper {

enum class CheckKind { PaperAsserted, Adjudication };
enum class Verdict { Pass, Fail, Indeterminate };
std::string check_kind_name(CheckKind k);
std::string verdict_name(Verdict v);

struct CheckRecord {
  std::string id;
  std::string cite;
  CheckKind kind = CheckKind::PaperAsserted;
  Verdict verdict = Verdict::Indeterminate;
  std::string witness;
  std::vector<std::string> notes;
  double seconds = 0;
};

struct VerificationReport {
  std::string suite;
  std::string engine_version;
  std::map<std::string, std::string> fixture_hashes;
  std::map<std::string, std::string> options;
  std::vector<CheckRecord> checks;

  /// Timing fields are omitted when `timing` is false, which makes two runs
  /// on the same fixtures byte-identical.
  Json to_json(bool timing = true) const;
  std::string summary() const;
  /// 0 iff every gating check passes.
  int exit_status(bool strict) const;
  const CheckRecord* find(const std::string& id) const;
};

std::string engine_version();

/// Which tensor products the mode-dependent checks use. "graded" runs the
/// graded sign convention that reproduces the printed two-parameter
/// R-matrix by contraction.
enum class ModeSelection { Graded, Ungraded, Both };
ModeSelection parse_mode_selection(const std::string& s);

struct SuiteOptions {
  ModeSelection modes = ModeSelection::Both;
  int order = 6;  // truncation of the exponential realization
  unsigned jobs = 1;
};

struct CheckDef {
  std::string id;
  std::function<Outcome()> run;
};

/// "all", "rmatrix", "contraction", "frt", "hopf", "star", "liesuper", "reps".
const std::vector<std::string>& suite_names();
/// Throws UnknownPreset for an unknown suite.
std::vector<CheckDef> suite_checks(const std::string& suite, const SuiteOptions& opts);

/// Runs up to opts.jobs checks at once; records keep the order of `defs`.
/// Throws FixtureMissing if a check id has no citation.
VerificationReport run_checks(const std::string& suite, const std::vector<CheckDef>& defs, const SuiteOptions& opts);
VerificationReport run_suite(const std::string& suite, const SuiteOptions& opts = {});

/// Example aliases from checks.json ("7.3" -> "Ah12" in group "star").
std::string resolve_alias(const std::string& group, const std::string& key);

/// Loads every preset and symbol single-threaded so concurrent checks only
/// read the registries.
void warm_up();

}  // namespace qsuper
