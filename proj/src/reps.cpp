#include "qsuper/reps.hpp"

#include <algorithm>

#include "qsuper/errors.hpp"
#include "qsuper/fixtures.hpp"
#include "qsuper/rmatrix.hpp"

namespace qsuper {

namespace {

const Json& reps_doc() { return fixture_store().load("representations.json").at("representations"); }

std::string matrix_text(const ScalarMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? "; " : "";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + m(i, j).str();
  }
  return out + "]";
}

}  // namespace

std::string rep_convention_name(RepConvention c) {
  return c == RepConvention::Left ? "rho(ab) = rho(a)rho(b)" : "rho(ab) = rho(b)rho(a)";
}

RepresentationSpec representation(const std::string& name) {
  const Json& doc = reps_doc();
  std::string key = name;
  if (!doc.contains(key))
    for (const auto& [k, v] : doc.items())
      for (const auto& a : v.value("aliases", Json::array()))
        if (a.get<std::string>() == name) key = k;
  if (!doc.contains(key)) throw UnknownPreset("unknown representation '" + name + "'");
  const Json& e = doc.at(key);
  RepresentationSpec s;
  s.name = key;
  s.aliases = e.value("aliases", std::vector<std::string>{});
  s.algebra = &preset(e.at("presentation").get<std::string>());
  s.claimed = e.value("claimed", true);
  s.cite = e.value("cite", key);
  for (const auto& [g, rows] : e.at("images").items()) {
    const Parities flat(rows.size(), 0);
    s.images.emplace(s.algebra->gen(g), matrix_from_json(rows, flat, flat));
  }
  if (e.contains("derived_from")) {
    const Json& d = e.at("derived_from");
    s.derived_from = std::array<std::string, 3>{d.at("representation").get<std::string>(),
                                                d.at("basis_change").get<std::string>(),
                                                d.at("route").get<std::string>()};
  }
  return s;
}

std::vector<std::string> representation_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : reps_doc().items()) out.push_back(k);
  return out;
}

RepCheck rep_check(const RepresentationSpec& spec, RepConvention convention) {
  const Presentation& p = *spec.algebra;
  for (GenId g : p.generators())
    if (!spec.images.count(g)) throw MissingImage("no matrix for '" + generator_name(g) + "' in " + spec.name);
  const std::size_t n = spec.images.begin()->second.rows();
  const Parities flat(n, 0);
  RepCheck res{convention, {}, Outcome::ok()};
  const RelationVerdict* worst = nullptr;
  std::vector<const Relation*> rels;
  for (const auto& r : p.relations()) rels.push_back(&r);
  for (const auto& r : p.redundant()) rels.push_back(&r);
  for (const Relation* rel : rels) {
    ScalarMatrix sum(flat, flat);
    for (const auto& [w, c] : rel->poly.terms()) {
      ScalarMatrix prod = ScalarMatrix::identity(flat);
      for (GenId g : w)
        prod = convention == RepConvention::Left ? prod * spec.images.at(g) : spec.images.at(g) * prod;
      sum = sum + prod.scaled(c);
    }
    RelationVerdict v{rel->label, rel->poly.terms().size(), sum.is_zero(), ""};
    if (!v.pass) {
      v.witness = matrix_witness(sum);
      std::vector<GenId> used;
      for (const auto& [w, c] : rel->poly.terms())
        for (GenId g : w)
          if (std::find(used.begin(), used.end(), g) == used.end()) used.push_back(g);
      for (GenId g : used) v.witness += "; " + generator_name(g) + " -> " + matrix_text(spec.images.at(g));
    }
    res.relations.push_back(std::move(v));
  }
  for (const auto& v : res.relations)
    if (!v.pass && (!worst || v.terms < worst->terms)) worst = &v;
  if (worst) {
    std::size_t failing = 0;
    for (const auto& v : res.relations) failing += !v.pass;
    res.outcome = Outcome::fail("'" + worst->label + "': " + worst->witness);
    res.outcome.note(std::to_string(failing) + " of " + std::to_string(res.relations.size()) + " relations fail");
  }
  res.outcome.note(rep_convention_name(convention));
  return res;
}

RepresentationSpec transform_rep(const RepresentationSpec& spec, const BasisChange& bc, const ContractionRoute& route) {
  const Presentation& target = preset(route.limit_target);
  ScalarMatrix ginv;
  try {
    ginv = mat_inv(bc.g);
  } catch (const Singular&) {
    throw NonInvertibleBasisChange("basis change '" + bc.name + "' is not invertible");
  }
  RepresentationSpec out = spec;
  out.name = spec.name + " under " + bc.name;
  out.images.clear();
  const std::size_t n = route.old_coords.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<ScalarMatrix> m;
    for (std::size_t j = 0; j < n; ++j) {
      const ScalarMatrix term = spec.images.at(spec.algebra->gen(route.old_coords[j])).scaled(ginv(i, j));
      m = m ? *m + term : term;
    }
    out.images.emplace(target.gen(route.new_coords[i]), *m);
  }
  return out;
}

RepAdjudication adjudicate(const std::string& name) {
  RepAdjudication a{representation(name), {}, {}, {}, std::nullopt};
  a.left = rep_check(a.spec, RepConvention::Left);
  a.opposite = rep_check(a.spec, RepConvention::Opposite);
  for (const auto* c : {&a.left, &a.opposite})
    if (c->outcome.pass) a.validating.push_back(c->convention);
  if (a.spec.derived_from) {
    const auto& [rep, bc_name, route_name] = *a.spec.derived_from;
    const ContractionRoute route = contraction_route(route_name);
    const RepresentationSpec derived = transform_rep(representation(rep), basis_change(bc_name, route.parities), route);
    Outcome o = Outcome::ok();
    for (const auto& [g, m] : a.spec.images) {
      auto it = derived.images.find(g);
      if (it == derived.images.end()) {
        o = Outcome::fail("no derived image for " + generator_name(g));
        break;
      }
      const ScalarMatrix d = m - it->second;
      if (!d.is_zero()) {
        o = Outcome::fail("printed minus derived image of " + generator_name(g) + ": " + matrix_witness(d));
        break;
      }
    }
    o.note("rebuilt from " + rep + " through " + bc_name);
    a.derived_match = o;
  }
  return a;
}

}  // namespace qsuper
