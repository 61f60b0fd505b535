#include "qsuper/fixtures.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qsuper/errors.hpp"
#include "qsuper/parse.hpp"

namespace qsuper {

namespace fs = std::filesystem;

namespace {

constexpr const char* kManifest = "manifest.json";

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw FixtureMissing("fixture file not found: " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error("SHA-256 digest failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[md[k] >> 4];
    out += hex[md[k] & 15];
  }
  return out;
}

FixtureStore::FixtureStore(fs::path dir) : dir_(std::move(dir)) {}

fs::path FixtureStore::default_dir() {
  if (const char* env = std::getenv("QSUPER_FIXTURE_DIR"); env && *env) return env;
  return QSUPER_FIXTURE_DIR;
}

std::map<std::string, std::string> FixtureStore::manifest() const {
  const Json doc = Json::parse(read_file(dir_ / kManifest));
  return doc.at("files").get<std::map<std::string, std::string>>();
}

const Json& FixtureStore::load(const std::string& file) const {
  std::lock_guard lock(mu_);
  if (auto it = cache_.find(file); it != cache_.end()) return it->second;
  const auto m = manifest();
  auto rec = m.find(file);
  if (rec == m.end()) throw FixtureMissing("fixture '" + file + "' is not listed in the manifest");
  const std::string bytes = read_file(dir_ / file);
  const std::string digest = sha256_hex(bytes);
  if (digest != rec->second)
    throw FixtureCorrupt("fixture '" + file + "' has digest " + digest + ", manifest records " + rec->second);
  try {
    return cache_.emplace(file, Json::parse(bytes)).first->second;
  } catch (const Json::parse_error& e) {
    throw FixtureCorrupt("fixture '" + file + "' is not valid JSON: " + e.what());
  }
}

std::vector<std::string> FixtureStore::verify_all() const {
  std::vector<std::string> bad;
  for (const auto& [file, digest] : manifest()) {
    const fs::path p = dir_ / file;
    if (!fs::exists(p) || sha256_hex(read_file(p)) != digest) bad.push_back(file);
  }
  return bad;
}

void FixtureStore::rehash() const {
  Json files = Json::object();
  for (const auto& entry : fs::directory_iterator(dir_)) {
    const std::string name = entry.path().filename().string();
    if (entry.path().extension() != ".json" || name == kManifest) continue;
    files[name] = sha256_hex(read_file(entry.path()));
  }
  std::ofstream out(dir_ / kManifest, std::ios::binary);
  out << Json{{"algorithm", "sha256"}, {"files", files}}.dump(2) << "\n";
  std::lock_guard lock(mu_);
  cache_.clear();
}

const FixtureStore& fixture_store() {
  static const FixtureStore store(FixtureStore::default_dir());
  return store;
}

std::vector<Relation> parse_relations(const Json& list, const std::vector<GenId>& gens) {
  std::vector<Relation> out;
  for (const auto& item : list) {
    const std::string text = item.at("text").get<std::string>();
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError("relation without '=': " + text);
    SuperPolynomial poly = parse_superpoly(text.substr(0, eq), gens) - parse_superpoly(text.substr(eq + 1), gens);
    out.push_back({std::move(poly), item.value("cite", text)});
  }
  return out;
}

namespace {

std::vector<GeneratorSpec> generator_specs(const Json& list) {
  std::vector<GeneratorSpec> out;
  for (const auto& g : list)
    out.push_back({g.at("name").get<std::string>(), g.at("parity").get<int>() ? Parity::Odd : Parity::Even});
  return out;
}

void register_declared_params(const Json& doc) {
  for (const char* key : {"even_params", "odd_params"})
    if (doc.contains(key))
      for (const auto& n : doc.at(key))
        register_param(n.get<std::string>(), key[0] == 'e' ? Parity::Even : Parity::Odd);
}

std::vector<GenId> register_specs(const std::vector<GeneratorSpec>& specs) {
  std::vector<GenId> ids;
  for (const auto& s : specs) ids.push_back(register_generator(s.name, s.parity));
  return ids;
}

}  // namespace

Presentation presentation_from_json(const Json& doc) {
  register_declared_params(doc);
  const auto specs = generator_specs(doc.at("generators"));
  const auto ids = register_specs(specs);
  const std::string name = doc.at("name").get<std::string>();
  if (doc.contains("rules")) {
    std::vector<RewriteRule> rules;
    for (const auto& r : doc.at("rules")) {
      const SuperPolynomial lhs = parse_superpoly(r.at("lhs").get<std::string>(), ids);
      if (lhs.terms().size() != 1 || !lhs.terms().begin()->second.is_one())
        throw ParseError("rule left side must be a single word: " + r.at("lhs").get<std::string>());
      rules.push_back({lhs.terms().begin()->first, parse_superpoly(r.at("rhs").get<std::string>(), ids),
                       r.value("comment", std::string())});
    }
    return Presentation::from_rules(name, specs, std::move(rules));
  }
  return Presentation::from_relations(name, specs, parse_relations(doc.at("relations"), ids));
}

Json presentation_to_json(const Presentation& p) {
  Json gens = Json::array();
  for (const auto& g : p.generator_specs()) gens.push_back({{"name", g.name}, {"parity", as_int(g.parity)}});
  Json rules = Json::array();
  for (const auto& r : p.rules())
    rules.push_back({{"lhs", SuperPolynomial(r.lhs).str()}, {"rhs", r.rhs.str()}, {"comment", r.label}});
  return {{"name", p.name()}, {"generators", gens}, {"rules", rules}};
}

ScalarMatrix matrix_from_json(const Json& rows, const Parities& rpar, const Parities& cpar) {
  return parse_matrix(rows.get<std::vector<std::vector<std::string>>>(), rpar, cpar);
}

Json matrix_to_json(const ScalarMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    rows.push_back(row);
  }
  return {{"row_parities", m.row_parities()}, {"col_parities", m.col_parities()}, {"rows", rows}};
}

ScalarMatrix fixture_rmatrix(const std::string& name, bool as_printed) {
  const Json& doc = fixture_store().load("rmatrices.json");
  const Json& mats = doc.at("matrices");
  if (!mats.contains(name)) throw FixtureMissing("no matrix named '" + name + "' in rmatrices.json");
  const Json& entry = mats.at(name);
  auto rows = entry.at("rows").get<std::vector<std::vector<std::string>>>();
  if (!as_printed && entry.contains("errata"))
    for (const auto& e : entry.at("errata"))
      rows.at(e.at("row").get<int>() - 1).at(e.at("col").get<int>() - 1) = e.at("corrected").get<std::string>();
  const Parities base = doc.at("parities").get<Parities>();
  const Parities comp = composite_parities(base, base);
  return parse_matrix(rows, comp, comp);
}

std::string fixture_rmatrix_cite(const std::string& name) {
  return fixture_store().load("rmatrices.json").at("matrices").at(name).value("cite", name);
}

std::map<std::string, SuperPolynomial> parse_images(const Json& obj, const Presentation& domain,
                                                    const Presentation& codomain) {
  std::map<std::string, SuperPolynomial> out;
  for (const auto& [key, val] : obj.items()) {
    if (!find_generator(key) || !domain.has_generator(*find_generator(key)))
      throw UnknownGenerator("'" + key + "' is not a generator of " + domain.name());
    out.emplace(key, parse_superpoly(val.get<std::string>(), codomain.generators()));
  }
  return out;
}

// ---- presets --------------------------------------------------------------

namespace {

const std::map<std::string, std::string>& preset_files() {
  static const std::map<std::string, std::string> files = {
      {"Aq12", "aq12.json"},   {"Apq21", "apq21.json"}, {"Ah12", "ah12.json"},   {"Ah'21", "ahp21.json"},
      {"Apq12", "apq12.json"}, {"Mhh12", "eq51.json"},  {"FAq12", "faq12.json"}, {"Ahq12", "ahq12.json"},
      {"Lie", "lie.json"},
  };
  return files;
}

Presentation build_preset(const std::string& name) {
  if (name == "FAqinv12") {
    const Presentation& src = preset("FAq12");
    const int q = find_param("q")->index;
    const std::map<int, RationalFunction> inv = {{q, RationalFunction::param(q, -1)}};
    std::vector<Relation> rels;
    for (const auto* list : {&src.relations(), &src.redundant()})
      for (const auto& r : *list)
        rels.push_back({r.poly.map_coefficients([&](const GrassmannScalar& c) { return c.substitute_even(inv); }),
                        r.label + " with q -> q^-1"});
    return Presentation::from_relations("FAqinv12", src.generator_specs(), rels);
  }
  auto it = preset_files().find(name);
  if (it == preset_files().end()) throw UnknownPreset("unknown preset '" + name + "'");
  return presentation_from_json(fixture_store().load(it->second));
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  for (const auto& [n, f] : preset_files()) out.push_back(n);
  out.push_back("FAqinv12");
  return out;
}

const Presentation& preset(const std::string& raw) {
  const std::string name = raw == "Ahp21" ? "Ah'21" : raw;
  static std::recursive_mutex mu;
  static std::map<std::string, Presentation> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(name); it != cache.end()) return it->second;
  return cache.emplace(name, build_preset(name)).first->second;
}

}  // namespace qsuper
