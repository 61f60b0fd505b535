#include "qsuper/hopfstar.hpp"

#include <mutex>

#include "qsuper/errors.hpp"
#include "qsuper/fixtures.hpp"
#include "qsuper/parse.hpp"

namespace qsuper {

namespace {

std::vector<Relation> all_relations(const Presentation& p) {
  std::vector<Relation> out = p.relations();
  out.insert(out.end(), p.redundant().begin(), p.redundant().end());
  return out;
}

const Json& hopf_doc() { return fixture_store().load("costructures.json").at("hopf"); }
const Json& stars_doc() { return fixture_store().load("stars.json"); }

std::map<std::string, std::string> string_map(const Json& j) {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) out.emplace(k, v.get<std::string>());
  return out;
}

SuperPolynomial image_or_self(GenId g, const Images& m) {
  auto it = m.find(g);
  return it == m.end() ? SuperPolynomial::generator(g) : it->second;
}

/// Splits a normal-ordered word of a tensor square into its two factors,
/// with the tags removed.
std::pair<Word, Word> split_factors(const Word& w, const std::map<GenId, std::pair<int, GenId>>& untag) {
  Word a, b;
  for (GenId g : w) {
    const auto& [f, plain] = untag.at(g);
    (f == 1 ? a : b).push_back(plain);
  }
  return {a, b};
}

void record(Outcome& out, const std::string& what, std::size_t& failures) {
  if (failures++ == 0) out.witness = what;
  out.pass = false;
}

Outcome summarize(Outcome out, std::size_t failures, const std::string& what) {
  if (failures > 1) out.note(std::to_string(failures) + " failures in total");
  out.note(what);
  return out;
}

}  // namespace

CostructureSpec costructure(const std::string& name) {
  const Json& doc = hopf_doc();
  if (!doc.contains(name)) throw UnknownPreset("unknown costructure '" + name + "'");
  const Json& e = doc.at(name);
  CostructureSpec cs;
  cs.name = name;
  cs.algebra = &preset(e.at("presentation").get<std::string>());
  cs.antipode_target = &preset(e.at("antipode_target").get<std::string>());
  cs.cite = e.value("cite", name);
  const Presentation sq = tensor_square(*cs.algebra);
  for (const auto& [g, text] : string_map(e.at("coproduct"))) cs.coproduct[cs.algebra->gen(g)] = sq.parse(text);
  for (const auto& [g, text] : string_map(e.at("counit"))) cs.counit[cs.algebra->gen(g)] = parse_scalar(text);
  for (const auto& [g, text] : string_map(e.at("antipode"))) cs.antipode[cs.algebra->gen(g)] = cs.algebra->parse(text);
  for (GenId g : cs.algebra->generators())
    if (!cs.coproduct.count(g) || !cs.counit.count(g) || !cs.antipode.count(g))
      throw MissingImage("costructure '" + name + "' has no image for '" + generator_name(g) + "'");
  return cs;
}

std::vector<std::string> costructure_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : hopf_doc().items()) out.push_back(k);
  return out;
}

std::string AntipodeReading::str() const {
  if (!antihomomorphism) return "homomorphism into " + target->name();
  return "antihomomorphism into " + target->name() + ", " + anti_sign_name(sign);
}

HopfVerdict hopf_check(const CostructureSpec& cs) {
  const Presentation& p = *cs.algebra;
  const Presentation sq = tensor_square(p);
  const Presentation cube = tensor_product({&p, &p, &p});
  const auto rels = all_relations(p);
  HopfVerdict v;

  std::map<GenId, std::pair<int, GenId>> untag;
  Images shift_up, eps_left, eps_right, coass_left, coass_right;
  for (GenId g : p.generators()) {
    const GenId g1 = tensor_generator(g, 1), g2 = tensor_generator(g, 2), g3 = tensor_generator(g, 3);
    untag[g1] = {1, g};
    untag[g2] = {2, g};
    shift_up[g1] = SuperPolynomial::generator(g2);
    shift_up[g2] = SuperPolynomial::generator(g3);
    eps_left[g1] = SuperPolynomial(cs.counit.at(g));
    eps_left[g2] = SuperPolynomial::generator(g);
    eps_right[g1] = SuperPolynomial::generator(g);
    eps_right[g2] = SuperPolynomial(cs.counit.at(g));
  }
  Images delta;
  for (const auto& [g, img] : cs.coproduct) delta[g] = sq.normal_form(img);
  for (GenId g : p.generators()) {
    const GenId g1 = tensor_generator(g, 1), g2 = tensor_generator(g, 2);
    coass_left[g1] = delta.at(g);
    coass_left[g2] = SuperPolynomial::generator(tensor_generator(g, 3));
    coass_right[g1] = SuperPolynomial::generator(g1);
    coass_right[g2] = apply_hom(delta.at(g), shift_up);
  }

  std::size_t failures = 0;
  v.coproduct_hom = Outcome::ok();
  for (const auto& r : rels) {
    const SuperPolynomial d = sq.normal_form(apply_hom(r.poly, delta));
    if (!d.is_zero()) record(v.coproduct_hom, "Delta('" + r.label + "') = " + d.str(), failures);
  }
  v.coproduct_hom = summarize(v.coproduct_hom, failures, std::to_string(rels.size()) + " relations mapped by Delta");

  failures = 0;
  v.coassociativity = Outcome::ok();
  for (GenId g : p.generators()) {
    const SuperPolynomial d =
        cube.normal_form(apply_hom(delta.at(g), coass_left) - apply_hom(delta.at(g), coass_right));
    if (!d.is_zero()) record(v.coassociativity, "on " + generator_name(g) + ": " + d.str(), failures);
  }
  v.coassociativity = summarize(v.coassociativity, failures, "checked on every generator");

  failures = 0;
  v.counit = Outcome::ok();
  Images eps;
  for (const auto& [g, c] : cs.counit) eps[g] = SuperPolynomial(c);
  for (const auto& r : rels) {
    const SuperPolynomial e = apply_hom(r.poly, eps);
    if (!e.is_zero()) record(v.counit, "eps('" + r.label + "') = " + e.str(), failures);
  }
  for (GenId g : p.generators())
    for (const auto* side : {&eps_left, &eps_right}) {
      const SuperPolynomial d = p.normal_form(apply_hom(delta.at(g), *side) - SuperPolynomial::generator(g));
      if (!d.is_zero())
        record(v.counit, std::string(side == &eps_left ? "(eps (x) id)" : "(id (x) eps)") + "Delta(" +
                             generator_name(g) + ") - " + generator_name(g) + " = " + d.str(),
               failures);
    }
  v.counit = summarize(v.counit, failures, "counit on relations and both counit laws on generators");

  failures = 0;
  v.antipode_laws = Outcome::ok();
  for (AntiSign sign : {AntiSign::Plain, AntiSign::Koszul})
    for (GenId g : p.generators())
      for (int side = 0; side < 2; ++side) {
        SuperPolynomial m;
        for (const auto& [w, c] : delta.at(g).terms()) {
          const auto [a, b] = split_factors(w, untag);
          const SuperPolynomial sa = side == 0 ? apply_antihom(SuperPolynomial(a), cs.antipode, sign) : SuperPolynomial(a);
          const SuperPolynomial sb = side == 1 ? apply_antihom(SuperPolynomial(b), cs.antipode, sign) : SuperPolynomial(b);
          m += SuperPolynomial(c) * sa * sb;
        }
        const SuperPolynomial d = p.normal_form(m - SuperPolynomial(cs.counit.at(g)));
        if (!d.is_zero())
          record(v.antipode_laws,
                 std::string(side == 0 ? "m(S (x) id)" : "m(id (x) S)") + "Delta(" + generator_name(g) + ") - eps = " +
                     d.str() + " with " + anti_sign_name(sign),
                 failures);
      }
  v.antipode_laws = summarize(v.antipode_laws, failures, "both antipode laws on every generator, under both signs");

  auto reading = [&](bool anti, AntiSign sign, const Presentation* target) {
    AntipodeReading r{anti, sign, target, Outcome::ok()};
    std::size_t n = 0;
    for (const auto& rel : rels) {
      const SuperPolynomial img = anti ? apply_antihom(rel.poly, cs.antipode, sign) : apply_hom(rel.poly, cs.antipode);
      const SuperPolynomial d = target->normal_form(img);
      if (!d.is_zero()) record(r.outcome, "S('" + rel.label + "') reduces to " + d.str() + " in " + target->name(), n);
    }
    r.outcome = summarize(r.outcome, n, r.str());
    return r;
  };
  for (AntiSign sign : {AntiSign::Plain, AntiSign::Koszul}) {
    v.readings.push_back(reading(true, sign, cs.antipode_target));
    if (v.readings.back().outcome.pass && !v.winning_sign) v.winning_sign = sign;
  }
  if (cs.antipode_target != cs.algebra) {
    for (AntiSign sign : {AntiSign::Plain, AntiSign::Koszul}) v.readings.push_back(reading(true, sign, cs.algebra));
    v.readings.push_back(reading(false, AntiSign::Plain, cs.antipode_target));
  }

  v.overall = Outcome::ok();
  for (const auto* o : {&v.coproduct_hom, &v.coassociativity, &v.counit, &v.antipode_laws})
    if (!o->pass) {
      v.overall = Outcome::fail(o->witness);
      break;
    }
  if (v.overall.pass && !v.winning_sign)
    v.overall = Outcome::fail("S is not an antihomomorphism into " + cs.antipode_target->name() + " under either sign: " +
                              v.readings.front().outcome.witness);
  for (const auto& r : v.readings) v.overall.note(r.str() + ": " + (r.outcome.pass ? "holds" : "fails"));
  return v;
}

void register_conjugate_symbols() {
  static std::once_flag once;
  std::call_once(once, [] {
    for (const auto& n : stars_doc().at("odd_params")) register_param(n.get<std::string>(), Parity::Odd);
  });
}

InvolutionSpec involution(const std::string& name) {
  register_conjugate_symbols();
  const Json& doc = stars_doc().at("involutions");
  if (!doc.contains(name)) throw UnknownPreset("unknown involution '" + name + "'");
  const Json& e = doc.at(name);
  InvolutionSpec inv;
  inv.name = name;
  inv.algebra = &preset(e.at("presentation").get<std::string>());
  for (const auto& [g, text] : string_map(e.at("images"))) inv.images[inv.algebra->gen(g)] = inv.algebra->parse(text);
  inv.conj = ConjugationSpec(string_map(e.at("even_conj")), string_map(e.at("odd_conj")));
  inv.flavor = e.value("flavor", std::string("star")) == "superstar" ? StarFlavor::Superstar : StarFlavor::Star;
  inv.cite = e.value("cite", name);
  return inv;
}

std::vector<std::string> involution_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : stars_doc().at("involutions").items()) out.push_back(k);
  return out;
}

SuperPolynomial apply_involution(const SuperPolynomial& p, const InvolutionSpec& inv) {
  return inv.flavor == StarFlavor::Star ? apply_star(p, inv.images, inv.conj) : apply_superstar(p, inv.images, inv.conj);
}

Outcome star_check(const InvolutionSpec& inv) {
  const Presentation& p = *inv.algebra;
  Outcome out = Outcome::ok();
  std::size_t failures = 0;
  const auto rels = all_relations(p);
  for (const auto& r : rels) {
    const SuperPolynomial d = p.normal_form(apply_involution(r.poly, inv));
    if (!d.is_zero()) record(out, "('" + r.label + "')* reduces to " + d.str(), failures);
  }
  for (GenId g : p.generators()) {
    const SuperPolynomial twice = apply_involution(image_or_self(g, inv.images), inv);
    const bool minus = inv.flavor == StarFlavor::Superstar && generator_parity(g) == Parity::Odd;
    const SuperPolynomial self = SuperPolynomial::generator(g);
    const SuperPolynomial d = p.normal_form(twice - (minus ? -self : self));
    if (!d.is_zero()) record(out, "applying the map twice to " + generator_name(g) + " leaves " + d.str(), failures);
  }
  return summarize(out, failures, std::to_string(rels.size()) + " relations and every generator of " + p.name());
}

namespace {

/// "-h" -> {-1, "h"}.
std::pair<int, std::string> signed_name(const std::string& s) {
  return s.rfind('-', 0) == 0 ? std::pair{-1, s.substr(1)} : std::pair{1, s};
}

}  // namespace

InducedStar induce_star(const BasisChange& bc, const ContractionRoute& route, const InvolutionSpec& src,
                        const StarInduction& how, const InvolutionSpec* expected) {
  register_conjugate_symbols();
  const Presentation& target = preset(route.limit_target);
  ScalarMatrix ginv;
  try {
    ginv = mat_inv(bc.g);
  } catch (const Singular&) {
    throw NonInvertibleBasisChange("basis change '" + bc.name + "' is not invertible");
  }
  const ConjugationSpec generic(how.generic_even, how.generic_odd);
  const std::size_t n = route.old_coords.size();
  std::vector<GenId> old_ids, new_ids;
  for (std::size_t i = 0; i < n; ++i) {
    old_ids.push_back(src.algebra->gen(route.old_coords[i]));
    new_ids.push_back(target.gen(route.new_coords[i]));
  }
  Images old_in_new;
  for (std::size_t j = 0; j < n; ++j) {
    SuperPolynomial img;
    for (std::size_t k = 0; k < n; ++k)
      if (!bc.g(j, k).is_zero()) img += SuperPolynomial(Word{new_ids[k]}, bc.g(j, k));
    old_in_new.emplace(old_ids[j], img);
  }

  InducedStar res;
  for (std::size_t i = 0; i < n; ++i) {
    SuperPolynomial img;
    for (std::size_t j = 0; j < n; ++j) {
      if (ginv(i, j).is_zero()) continue;
      const SuperPolynomial star_old = apply_hom(image_or_self(old_ids[j], src.images), old_in_new);
      img += star_old * SuperPolynomial(sconj(ginv(i, j), generic));
    }
    res.generic[new_ids[i]] = img;
  }

  std::map<std::string, GrassmannScalar> subst;
  OddMask conj_symbols = 0;
  for (const auto& [sym, val] : how.constraints) {
    const auto [sign, name] = signed_name(val);
    subst[sym] = GrassmannScalar(sign) * GrassmannScalar::odd_param(name);
  }
  for (const auto& n2 : stars_doc().at("odd_params")) conj_symbols |= OddMask(1) << find_param(n2.get<std::string>())->index;

  res.induced.name = "induced by " + bc.name;
  res.induced.algebra = &target;
  const auto point = contraction_point();
  for (const auto& [g, img] : res.generic) {
    SuperPolynomial constrained = substitute_odd(img, subst);
    if (how.drop_mask)
      constrained = constrained.map_coefficients([&](const GrassmannScalar& c) { return c.drop_containing(how.drop_mask); });
    for (const auto& [w, c] : constrained.terms())
      if (c.odd_support() & conj_symbols)
        throw ConstraintUnsatisfied("image of " + generator_name(g) + " still involves a conjugate symbol: " +
                                    constrained.str());
    try {
      res.induced.images[g] = target.normal_form(limit(constrained, point));
    } catch (const PoleAtLimit& e) {
      throw ConstraintUnsatisfied("image of " + generator_name(g) + " is singular at the limit: " + e.what());
    }
  }

  // conjugation on the target: p -> generic(p), then the constraint
  std::map<std::string, std::string> odd;
  for (const auto& [k, v] : how.generic_odd) {
    if (how.constraints.count(k)) continue;  // k is itself a conjugate symbol
    const auto [s1, sym] = signed_name(v);
    auto it = how.constraints.find(sym);
    if (it == how.constraints.end()) continue;
    const auto [s2, name] = signed_name(it->second);
    odd[k] = (s1 * s2 < 0 ? "-" : "") + name;
  }
  res.induced.conj = ConjugationSpec(how.generic_even, odd);
  res.induced.cite = src.cite;

  res.match = Outcome::ok();
  if (expected) {
    std::size_t failures = 0;
    for (GenId g : target.generators()) {
      const SuperPolynomial d =
          target.normal_form(image_or_self(g, res.induced.images) - image_or_self(g, expected->images));
      if (!d.is_zero())
        record(res.match,
               generator_name(g) + "* = " + image_or_self(g, res.induced.images).str() + ", expected " +
                   image_or_self(g, expected->images).str(),
               failures);
    }
    for (const auto& [idx, im] : expected->conj.odd_images()) {
      const GrassmannScalar h = GrassmannScalar::odd_param(odd_param_name(idx));
      GrassmannScalar mine;
      try {
        mine = sconj(h, res.induced.conj);
      } catch (const MissingImage&) {
        record(res.match, "no induced conjugate for " + odd_param_name(idx), failures);
        continue;
      }
      if (!(mine == sconj(h, expected->conj)))
        record(res.match, "conjugate of " + odd_param_name(idx) + " is " + mine.str(), failures);
    }
    res.match = summarize(res.match, failures, "compared with " + expected->name);
  }
  res.closure = star_check(res.induced);
  res.pre_constraint = Outcome::ok();
  return res;
}

InducedStar induce_star(const std::string& induction, bool first_order) {
  register_conjugate_symbols();
  const Json& doc = stars_doc().at("inductions");
  if (!doc.contains(induction)) throw UnknownPreset("unknown star induction '" + induction + "'");
  const Json& e = doc.at(induction);
  const ContractionRoute route = contraction_route(e.at("route").get<std::string>());
  const BasisChange bc = basis_change(e.at("basis_change").get<std::string>(), route.parities);
  const InvolutionSpec src = involution(e.at("source").get<std::string>());
  StarInduction how{string_map(e.at("generic_conj").at("even")), string_map(e.at("generic_conj").at("odd")),
                    string_map(e.at("constraints"))};
  if (first_order) {
    OddMask m = 0;
    for (std::size_t i = 0; i < bc.g.rows(); ++i)
      for (std::size_t j = 0; j < bc.g.cols(); ++j) m |= bc.g(i, j).odd_support();
    if (m & (m - 1)) how.drop_mask = m;  // a single parameter has no products to drop
  }
  const InvolutionSpec expected = involution(e.at("expected").get<std::string>());
  InducedStar res = induce_star(bc, route, src, how, &expected);
  res.cite = e.value("cite", induction);
  if (e.contains("pre_constraint")) {
    const Presentation& target = *res.induced.algebra;
    std::size_t failures = 0;
    for (const auto& [g, text] : string_map(e.at("pre_constraint"))) {
      const GenId id = target.gen(g);
      const SuperPolynomial d = res.generic.at(id) - target.parse(text);
      if (!d.is_zero())
        record(res.pre_constraint, g + "* = " + res.generic.at(id).str() + " before the constraints, expected " + text,
               failures);
    }
    res.pre_constraint = summarize(res.pre_constraint, failures, "generic images before the constraints");
  }
  return res;
}

std::vector<std::string> induction_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : stars_doc().at("inductions").items()) out.push_back(k);
  return out;
}

}  // namespace qsuper
