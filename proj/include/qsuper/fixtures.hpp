#pragma once

// Content-hashed JSON fixtures and the presentation registry built on them.
// Every file under the fixture directory is listed in manifest.json with its
// SHA-256; loading a file whose digest differs raises FixtureCorrupt.

#include <filesystem>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include <json.hpp>

#include "qsuper/graded_matrix.hpp"
#include "qsuper/presentation.hpp"

namespace qsuper {

using Json = nlohmann::json;

class FixtureStore {
 public:
  explicit FixtureStore(std::filesystem::path dir);

  /// $QSUPER_FIXTURE_DIR if set, else the source tree's fixtures/.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }
  /// Parsed content of `file` after verifying its digest. Cached.
  const Json& load(const std::string& file) const;
  /// Digests recorded in the manifest.
  std::map<std::string, std::string> manifest() const;
  /// Files whose current digest differs from the manifest (or are missing).
  std::vector<std::string> verify_all() const;
  /// Rewrites manifest.json from the files currently on disk.
  void rehash() const;

 private:
  std::filesystem::path dir_;
  mutable std::mutex mu_;
  mutable std::map<std::string, Json> cache_;
};

std::string sha256_hex(const std::string& bytes);

/// Process-wide store rooted at FixtureStore::default_dir().
const FixtureStore& fixture_store();

/// Registered preset names: Aq12, Apq21, Ah12, Ah'21, Apq12, Mhh12, FAq12,
/// FAqinv12, Ahq12, Lie.
std::vector<std::string> preset_names();
/// Throws UnknownPreset.
const Presentation& preset(const std::string& name);

/// Relations of the form "lhs = rhs" with their citations, parsed over the
/// generators of `p`.
std::vector<Relation> parse_relations(const Json& list, const std::vector<GenId>& gens);
Presentation presentation_from_json(const Json& doc);
Json presentation_to_json(const Presentation& p);

ScalarMatrix matrix_from_json(const Json& rows, const Parities& rpar, const Parities& cpar);
Json matrix_to_json(const ScalarMatrix& m);

/// Printed 9x9 matrices: "rhat_pq", "rhat_hh", "r_h" (errata applied unless
/// `as_printed`).
ScalarMatrix fixture_rmatrix(const std::string& name, bool as_printed = false);
/// Citation recorded next to a fixture matrix.
std::string fixture_rmatrix_cite(const std::string& name);

/// Square substitution maps in a fixture, keyed by generator name.
std::map<std::string, SuperPolynomial> parse_images(const Json& obj, const Presentation& domain,
                                                    const Presentation& codomain);

}  // namespace qsuper
