#include "qsuper/frt.hpp"

#include <map>

#include "qsuper/contraction.hpp"
#include "qsuper/errors.hpp"
#include "qsuper/fixtures.hpp"
#include "qsuper/morphism.hpp"
#include "qsuper/relspan.hpp"
#include "qsuper/rmatrix.hpp"

namespace qsuper {

namespace {

constexpr const char* kMatrixPreset = "Mhh12";

std::vector<Relation> all_relations(const Presentation& p) {
  std::vector<Relation> out = p.relations();
  out.insert(out.end(), p.redundant().begin(), p.redundant().end());
  return out;
}

GenId entry_generator(const PolyMatrix& t, std::size_t i, std::size_t j) {
  const auto& terms = t(i, j).terms();
  if (terms.size() != 1 || terms.begin()->first.size() != 1) throw SignatureError("T must have generator entries");
  return terms.begin()->first.front();
}

SuperPolynomial tagged(const PolyMatrix& t, std::size_t i, std::size_t j, int factor) {
  return SuperPolynomial::generator(tensor_generator(entry_generator(t, i, j), factor));
}

/// Delta(t_ij) in factors (f, f+1).
SuperPolynomial coproduct(const PolyMatrix& t, std::size_t i, std::size_t j, int f = 1) {
  SuperPolynomial r;
  for (std::size_t k = 0; k < t.cols(); ++k) r += tagged(t, i, k, f) * tagged(t, k, j, f + 1);
  return r;
}

GrassmannScalar counit(std::size_t i, std::size_t j) { return GrassmannScalar(i == j ? 1 : 0); }

std::string entry_name(const PolyMatrix& t, std::size_t i, std::size_t j) {
  return generator_name(entry_generator(t, i, j));
}

/// Images of t@from -> t@to for every entry.
Images retag(const PolyMatrix& t, int from, int to) {
  Images m;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j)
      m[tensor_generator(entry_generator(t, i, j), from)] = tagged(t, i, j, to);
  return m;
}

void record(Outcome& out, const std::string& what, std::size_t& failures) {
  if (failures++ == 0) out.witness = what;
  out.pass = false;
}

}  // namespace

const Presentation& matrix_preset() { return preset(kMatrixPreset); }

const PolyMatrix& t_matrix() {
  static const PolyMatrix t = [] {
    matrix_preset();  // registers the generators
    const Json& rows = fixture_store().load("eq51.json").at("matrix");
    const Parities& par = superspace_parities();
    PolyMatrix m(par, par);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = SuperPolynomial::generator(rows[i][j].get<std::string>());
    if (!m.is_even_supermatrix()) throw SignatureError("parities of T do not match (0,1,1)");
    return m;
  }();
  return t;
}

const Presentation& free_t_algebra() {
  static const Presentation p = free_presentation(matrix_preset().generators(), "free " + matrix_preset().name());
  return p;
}

std::vector<Relation> frt_relations(const ScalarMatrix& rhat, KronMode mode) {
  const PolyMatrix& t = t_matrix();
  const PolyMatrix id = PolyMatrix::identity(t.row_parities());
  const PolyMatrix p = to_poly_matrix(super_permutation(t.row_parities(), mode != KronMode::Ungraded));
  const PolyMatrix t1 = graded_kron(t, id, mode);
  const PolyMatrix t2 = p * t1 * p;
  const PolyMatrix r = to_poly_matrix(rhat);
  const PolyMatrix d = r * t1 * t2 - t1 * t2 * r;
  std::vector<Relation> out;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (!d(i, j).is_zero())
        out.push_back({d(i, j), "FRT entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"});
  return out;
}

std::vector<Relation> coaction_relations(const std::vector<CoactedSpace>& spaces) {
  const PolyMatrix& t = t_matrix();
  std::map<GenId, GenId> untag;
  for (GenId g : free_t_algebra().generators()) untag[tensor_generator(g, 1)] = g;
  std::vector<Relation> out;
  for (const auto& s : spaces) {
    if (s.coords.size() != t.cols()) throw DimensionMismatch("coordinate count does not match T");
    const Presentation mixed = tensor_product({&free_t_algebra(), s.space});
    Images images;
    for (std::size_t i = 0; i < s.coords.size(); ++i) {
      SuperPolynomial img;
      for (std::size_t k = 0; k < s.coords.size(); ++k)
        img += tagged(t, i, k, 1) * SuperPolynomial::generator(tensor_generator(s.coords[k], 2));
      images.emplace(s.coords[i], img);
    }
    for (const auto& rel : all_relations(*s.space)) {
      const SuperPolynomial nf = mixed.normal_form(apply_hom(rel.poly, images));
      std::map<Word, SuperPolynomial> by_coord_word;
      for (const auto& [w, c] : nf.terms()) {
        Word prefix, suffix;
        for (GenId g : w) {
          auto it = untag.find(g);
          (it != untag.end() && suffix.empty() ? prefix : suffix).push_back(it != untag.end() ? it->second : g);
        }
        by_coord_word[suffix] += SuperPolynomial(prefix, c);
      }
      for (auto& [w, poly] : by_coord_word)
        if (!poly.is_zero())
          out.push_back({std::move(poly), "coaction on " + s.space->name() + " of '" + rel.label + "', word " + word_str(w)});
    }
  }
  return out;
}

namespace {

CoactedSpace route_space(const std::string& route_name) {
  const ContractionRoute r = contraction_route(route_name);
  const Presentation& p = preset(r.limit_target);
  CoactedSpace s{&p, {}};
  for (const auto& n : r.new_coords) s.coords.push_back(p.gen(n));
  return s;
}

}  // namespace

CoactedSpace superspace_coaction() { return route_space("superspace"); }
CoactedSpace dual_coaction() { return route_space("exterior"); }

FrtTriangle frt_triangle(const ScalarMatrix& rhat, KronMode mode) {
  const auto frt = frt_relations(rhat, mode);
  const auto coact = coaction_relations({superspace_coaction(), dual_coaction()});
  const auto fixture = all_relations(matrix_preset());
  const Presentation& order = free_t_algebra();
  auto verdict = [&](const std::vector<Relation>& a, const std::vector<Relation>& b) {
    const EquivVerdict v = ideal_equiv(a, b, order);
    Outcome o = v.equal ? Outcome::ok() : Outcome::fail(v.str());
    o.note(std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " relations");
    return o;
  };
  return {verdict(frt, coact), verdict(frt, fixture), verdict(coact, fixture)};
}

Outcome bialgebra_check(const Presentation& p, const PolyMatrix& t) {
  Outcome out = Outcome::ok();
  std::size_t failures = 0;
  const Presentation sq = tensor_square(p);
  Images delta, eps;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) {
      delta[entry_generator(t, i, j)] = coproduct(t, i, j);
      eps[entry_generator(t, i, j)] = SuperPolynomial(counit(i, j));
    }
  const auto rels = all_relations(p);
  for (const auto& r : rels) {
    const SuperPolynomial d = sq.normal_form(apply_hom(r.poly, delta));
    if (!d.is_zero()) record(out, "Delta('" + r.label + "') = " + d.str(), failures);
    const SuperPolynomial e = apply_hom(r.poly, eps);
    if (!e.is_zero()) record(out, "eps('" + r.label + "') = " + e.str(), failures);
  }
  const Presentation cube = tensor_product({&p, &p, &p});
  Images left = retag(t, 2, 3), right = retag(t, 1, 1);
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) {
      left[tensor_generator(entry_generator(t, i, j), 1)] = coproduct(t, i, j, 1);
      right[tensor_generator(entry_generator(t, i, j), 2)] = coproduct(t, i, j, 2);
    }
  Images eps_left = retag(t, 1, 1), eps_right = retag(t, 2, 2);
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const GenId g = entry_generator(t, i, j);
      eps_left[tensor_generator(g, 1)] = SuperPolynomial(counit(i, j));
      eps_left[tensor_generator(g, 2)] = t(i, j);
      eps_right[tensor_generator(g, 1)] = t(i, j);
      eps_right[tensor_generator(g, 2)] = SuperPolynomial(counit(i, j));
    }
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const SuperPolynomial d = coproduct(t, i, j);
      const SuperPolynomial c = cube.normal_form(apply_hom(d, left) - apply_hom(d, right));
      if (!c.is_zero()) record(out, "coassociativity on " + entry_name(t, i, j) + ": " + c.str(), failures);
      for (const auto* e : {&eps_left, &eps_right}) {
        const SuperPolynomial r = apply_hom(d, *e) - t(i, j);
        if (!r.is_zero()) record(out, "counit law on " + entry_name(t, i, j) + ": " + r.str(), failures);
      }
    }
  if (failures > 1) out.note(std::to_string(failures) + " failures in total");
  out.note(std::to_string(rels.size()) + " relations mapped by Delta and eps");
  return out;
}

Outcome comodule_check(const CoactedSpace& space, const Presentation& matrix, const PolyMatrix& t) {
  Outcome out = Outcome::ok();
  std::size_t failures = 0;
  const std::size_t n = space.coords.size();
  if (n != t.cols()) throw DimensionMismatch("coordinate count does not match T");
  auto coord = [&](std::size_t k, int f) { return SuperPolynomial::generator(tensor_generator(space.coords[k], f)); };
  // delta(x_i) with T in factor f and x in factor f + 1
  auto coaction = [&](std::size_t i, int f) {
    SuperPolynomial r;
    for (std::size_t k = 0; k < n; ++k) r += tagged(t, i, k, f) * coord(k, f + 1);
    return r;
  };
  const Presentation mp = tensor_product({&matrix, space.space});
  Images delta;
  for (std::size_t i = 0; i < n; ++i) delta[space.coords[i]] = coaction(i, 1);
  const auto rels = all_relations(*space.space);
  for (const auto& r : rels) {
    const SuperPolynomial d = mp.normal_form(apply_hom(r.poly, delta));
    if (!d.is_zero()) record(out, "delta('" + r.label + "') = " + d.str(), failures);
  }
  const Presentation triple = tensor_product({&matrix, &matrix, space.space});
  Images left, right, eps;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) {
      const GenId g = tensor_generator(entry_generator(t, i, j), 1);
      left[g] = coproduct(t, i, j, 1);
      right[g] = tagged(t, i, j, 1);
      eps[g] = SuperPolynomial(counit(i, j));
    }
  for (std::size_t k = 0; k < n; ++k) {
    const GenId x2 = tensor_generator(space.coords[k], 2);
    left[x2] = coord(k, 3);
    right[x2] = coaction(k, 2);
    eps[x2] = SuperPolynomial::generator(space.coords[k]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const SuperPolynomial d = coaction(i, 1);
    const SuperPolynomial c = triple.normal_form(apply_hom(d, left) - apply_hom(d, right));
    const std::string name = generator_name(space.coords[i]);
    if (!c.is_zero()) record(out, "coassociativity on " + name + ": " + c.str(), failures);
    const SuperPolynomial e = apply_hom(d, eps) - SuperPolynomial::generator(space.coords[i]);
    if (!e.is_zero()) record(out, "counit law on " + name + ": " + e.str(), failures);
  }
  if (failures > 1) out.note(std::to_string(failures) + " failures in total");
  out.note(std::to_string(rels.size()) + " relations of " + space.space->name() + " mapped by the coaction");
  return out;
}

}  // namespace qsuper
