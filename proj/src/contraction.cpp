#include "qsuper/contraction.hpp"


#include "qsuper/errors.hpp"
#include "qsuper/fixtures.hpp"
#include "qsuper/morphism.hpp"
#include "qsuper/parse.hpp"
#include "qsuper/relspan.hpp"
#include "qsuper/rmatrix.hpp"

namespace qsuper {

BasisChange basis_change(const std::string& name, const Parities& par) {
  const Json& doc = fixture_store().load("basis_changes.json");
  const Json& changes = doc.at("changes");
  if (!changes.contains(name)) throw UnknownPreset("unknown basis change '" + name + "'");
  const Json& e = changes.at(name);
  return {name, matrix_from_json(e.at("rows"), par, par), e.value("cite", name)};
}

std::vector<std::string> basis_change_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : fixture_store().load("basis_changes.json").at("changes").items()) out.push_back(k);
  return out;
}

ContractionRoute contraction_route(const std::string& name) {
  const Json& routes = fixture_store().load("basis_changes.json").at("routes");
  if (!routes.contains(name)) throw UnknownPreset("unknown contraction route '" + name + "'");
  const Json& r = routes.at(name);
  return {name,
          r.at("source").get<std::string>(),
          r.at("old").get<std::vector<std::string>>(),
          r.at("new").get<std::vector<std::string>>(),
          r.at("parities").get<Parities>(),
          r.at("limit_target").get<std::string>(),
          r.value("prelimit_target", std::string())};
}

std::map<std::string, GaussRational> contraction_point() {
  std::map<std::string, GaussRational> out;
  for (const auto& [k, v] : fixture_store().load("basis_changes.json").at("limit").items()) {
    const RationalFunction s = parse_scalar(v.get<std::string>()).body();
    if (!s.is_constant()) throw ParseError("limit value for '" + k + "' is not a constant");
    out.emplace(k, s.num().constant_term());
  }
  return out;
}

namespace {

OddMask support(const std::vector<SuperPolynomial>& ps) {
  OddMask m = 0;
  for (const auto& p : ps)
    for (const auto& [w, c] : p.terms()) m |= c.odd_support();
  return m;
}

std::vector<Relation> canonical(const std::vector<SuperPolynomial>& polys, const Presentation& order,
                                const std::string& label) {
  RelationModule m(order, support(polys));
  for (const auto& p : polys) m.add(p);
  std::vector<Relation> out;
  for (auto& g : m.generators()) out.push_back({std::move(g), label});
  return out;
}

std::vector<GenId> ids(const std::vector<std::string>& names) {
  std::vector<GenId> out;
  for (const auto& n : names) {
    auto g = find_generator(n);
    if (!g) throw UnknownGenerator("unknown generator '" + n + "'");
    out.push_back(*g);
  }
  return out;
}

}  // namespace

std::vector<Relation> transform_relations(const ScalarMatrix& g, const Presentation& src,
                                          const std::vector<GenId>& old_coords, const std::vector<GenId>& new_coords,
                                          const Presentation& order) {
  if (g.rows() != old_coords.size() || g.cols() != new_coords.size())
    throw DimensionMismatch("basis change does not match the coordinates");
  try {
    (void)mat_inv(g);
  } catch (const Singular&) {
    throw NonInvertibleBasisChange("basis change is not invertible over the Grassmann scalars");
  }
  Images images;
  for (std::size_t i = 0; i < old_coords.size(); ++i) {
    SuperPolynomial img;
    for (std::size_t j = 0; j < new_coords.size(); ++j)
      if (!g(i, j).is_zero()) img += SuperPolynomial(Word{new_coords[j]}, g(i, j));
    images.emplace(old_coords[i], img);
  }
  std::vector<SuperPolynomial> polys;
  for (const auto* list : {&src.relations(), &src.redundant()})
    for (const auto& r : *list) polys.push_back(apply_hom(r.poly, images));
  return canonical(polys, order, "transformed from " + src.name());
}

std::vector<Relation> limit_relations(const std::vector<Relation>& rels, const std::map<std::string, GaussRational>& point,
                                      const Presentation& order) {
  std::vector<SuperPolynomial> polys;
  for (const auto& r : rels) polys.push_back(limit(r.poly, point));
  return canonical(polys, order, "limit");
}

std::vector<std::string> odd_params_in(const std::vector<Relation>& rels) {
  std::vector<std::string> out;
  OddMask m = 0;
  for (const auto& r : rels)
    for (const auto& [w, c] : r.poly.terms()) m |= c.odd_support();
  for (int i = 0; (m >> i) != 0; ++i)
    if ((m >> i) & 1u) out.push_back(odd_param_name(i));
  return out;
}

Outcome verbatim_match(const std::vector<Relation>& derived, const std::vector<Relation>& printed,
                       const Presentation& order) {
  const EquivVerdict eq = ideal_equiv(derived, printed, order);
  if (!eq.equal) return Outcome::fail("ideals differ, " + eq.str());
  std::vector<SuperPolynomial> dp, pp;
  for (const auto& r : derived) dp.push_back(r.poly);
  for (const auto& r : printed) pp.push_back(r.poly);
  RelationModule m(order, support(dp) | support(pp));
  for (const auto& p : dp) m.add(p);
  const auto gens = m.generators();
  if (gens.size() != printed.size())
    return Outcome::fail("derived set has " + std::to_string(gens.size()) + " generators, printed set has " +
                         std::to_string(printed.size()));
  Outcome out = Outcome::ok();
  for (const auto& r : printed) {
    const SuperPolynomial n = m.monic(r.poly);
    bool found = false;
    for (const auto& g : gens) found = found || g == n;
    if (!found) out.note("'" + r.label + "' equals a derived relation up to odd-parameter multiples of the others");
  }
  return out;
}

ContractionResult contract(const std::string& route_name, const std::string& bc_name) {
  const ContractionRoute route = contraction_route(route_name);
  const BasisChange bc = basis_change(bc_name, route.parities);
  const Presentation& src = preset(route.source);
  const Presentation& target = preset(route.limit_target);
  const Presentation order = free_presentation(target.generators(), target.name());
  ContractionResult res;
  res.prelimit = transform_relations(bc.g, src, ids(route.old_coords), ids(route.new_coords), order);
  if (!route.prelimit_target.empty()) {
    const Presentation& pre = preset(route.prelimit_target);
    res.prelimit_match = verbatim_match(res.prelimit, pre.relations(), order);
  } else {
    res.prelimit_match = Outcome::ok({"no printed pre-limit relations for this route"});
  }
  res.limit = limit_relations(res.prelimit, contraction_point(), order);
  res.limit_match = verbatim_match(res.limit, target.relations(), order);
  return res;
}

RMatrixContraction contract_rmatrix(const ScalarMatrix& rhat, const ScalarMatrix& g, KronMode mode,
                                    const ScalarMatrix& expected) {
  const ScalarMatrix gg = graded_kron(g, g, mode);
  RMatrixContraction res{mode, mat_inv(gg) * rhat * gg, {}, {}};
  const auto point = contraction_point();
  res.limit = ScalarMatrix(res.conjugated.row_parities(), res.conjugated.col_parities());
  for (std::size_t i = 0; i < res.limit.rows(); ++i)
    for (std::size_t j = 0; j < res.limit.cols(); ++j) {
      try {
        res.limit(i, j) = slimit(res.conjugated(i, j), point);
      } catch (const PoleAtLimit& e) {
        res.match = Outcome::fail("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): " + e.what());
        return res;
      }
    }
  const ScalarMatrix d = res.limit - expected;
  res.match = d.is_zero() ? Outcome::ok({"all entries pole-free at (p,q) = (1,1)"}) : Outcome::fail(matrix_witness(d));
  res.match.note("kronecker sign: " + kron_mode_name(mode));
  return res;
}

KronMode reproducing_kron_mode() {
  static const KronMode mode = [] {
    const ScalarMatrix g = basis_change("full", superspace_parities()).g;
    const ScalarMatrix pq = build_rhat_pq().rhat, hh = build_rhat_hh().rhat;
    for (KronMode m : {KronMode::Graded, KronMode::GradedAlt})
      if (contract_rmatrix(pq, g, m, hh).match.pass) return m;
    return KronMode::Graded;
  }();
  return mode;
}

}  // namespace qsuper
