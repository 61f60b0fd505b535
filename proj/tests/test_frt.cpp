#include "doctest.h"

#include "qsuper/contraction.hpp"
#include "qsuper/fixtures.hpp"
#include "qsuper/frt.hpp"
#include "qsuper/morphism.hpp"
#include "qsuper/parse.hpp"
#include "qsuper/relspan.hpp"
#include "qsuper/rmatrix.hpp"

#include <random>

using namespace qsuper;

namespace {

const Parities& par() { return superspace_parities(); }

ScalarMatrix drop_param(const ScalarMatrix& m, const char* name) {
  const OddMask mask = parse_scalar(name).odd_support();
  return m.map([&](const GrassmannScalar& e) { return e.drop_containing(mask); });
}

bool implies(const std::vector<Relation>& rels, const SuperPolynomial& r) {
  std::vector<Relation> more = rels;
  more.push_back({r, ""});
  return ideal_equiv(more, rels, free_t_algebra()).equal;
}

/// Random invertible rational recombination: a unit lower triangular mix
/// followed by nonzero scalings.
std::vector<Relation> recombine(const std::vector<Relation>& rels, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3);
  std::vector<Relation> out = rels;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) out[i].poly += rels[j].poly.left_scaled(GrassmannScalar(c(rng)));
    const int s = c(rng);
    out[i].poly = out[i].poly.left_scaled(GrassmannScalar(s == 0 ? 5 : s));
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace

TEST_CASE("the three routes to the matrix relations agree") {
  const FrtTriangle t = frt_triangle(build_rhat_hh().rhat, reproducing_kron_mode());
  CHECK_MESSAGE(t.frt_vs_fixture.pass, t.frt_vs_fixture.witness);
  CHECK_MESSAGE(t.frt_vs_coaction.pass, t.frt_vs_coaction.witness);
  CHECK_MESSAGE(t.coaction_vs_fixture.pass, t.coaction_vs_fixture.witness);
}

TEST_CASE("generated relations are homogeneous and imply the displayed families") {
  const auto frt = frt_relations(build_rhat_hh().rhat, reproducing_kron_mode());
  const auto coact = coaction_relations({superspace_coaction(), dual_coaction()});
  for (const auto* rels : {&frt, &coact})
    for (const auto& r : *rels) CHECK_FALSE(r.poly.is_zero());
  for (const auto* rels : {&frt, &coact})
    for (const auto& r : *rels) CHECK_MESSAGE(r.poly.parity() >= 0, r.poly.str());
  const Presentation& m = matrix_preset();
  const SuperPolynomial b = m.parse("b");
  for (const char* t : {"a", "alpha", "beta", "gamma", "c", "delta", "d", "e"})
    CHECK_MESSAGE(implies(frt, b * m.parse(t) - m.parse(t) * b), t);
  CHECK(implies(coact, m.parse("alpha^2 - h'*alpha*d")));
}

TEST_CASE("at h = h' = 0 the relations are supercommutation") {
  const Presentation& m = matrix_preset();
  std::vector<Relation> comm;
  const auto& gens = m.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i; j < gens.size(); ++j) {
      const SuperPolynomial a = SuperPolynomial::generator(gens[i]), b = SuperPolynomial::generator(gens[j]);
      const bool both_odd = a.parity() == 1 && b.parity() == 1;
      if (i == j && !both_odd) continue;
      comm.push_back({a * b + (both_odd ? b * a : -(b * a)), ""});
    }
  const ScalarMatrix flip = super_permutation(par());
  CHECK(ideal_equiv(frt_relations(flip, reproducing_kron_mode()), comm, free_t_algebra()).equal);
}

TEST_CASE("specializing h' = 0 commutes with generating the relations") {
  const std::vector<Relation>& fixture = matrix_preset().relations();
  std::vector<Relation> spec;
  for (const auto& r : fixture) {
    const SuperPolynomial p = substitute_odd(r.poly, {{"h'", GrassmannScalar()}});
    if (!p.is_zero()) spec.push_back({p, r.label});
  }
  const auto frt = frt_relations(drop_param(build_rhat_hh().rhat, "h'"), reproducing_kron_mode());
  CHECK(ideal_equiv(frt, spec, free_t_algebra()).equal);
}

TEST_CASE("ideal comparison") {
  const std::vector<Relation>& fixture = matrix_preset().relations();
  const Presentation& order = free_t_algebra();
  CHECK(ideal_equiv(fixture, fixture, order).equal);

  std::mt19937_64 rng(77);
  for (int n = 0; n < 3; ++n) {
    const auto mixed = recombine(fixture, rng);
    CHECK(ideal_equiv(mixed, fixture, order).equal);
    CHECK(ideal_equiv(fixture, mixed, order).equal);
  }

  // dropping an independent relation is detected and the dropped one is named
  bool found = false;
  for (std::size_t k = 0; k < fixture.size() && !found; ++k) {
    std::vector<Relation> fewer = fixture;
    fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(k));
    const EquivVerdict v = ideal_equiv(fewer, fixture, order);
    if (v.equal) continue;
    found = true;
    REQUIRE(v.witness.has_value());
    CHECK(v.direction == "second-not-in-first");
    CHECK(v.witness->label == fixture[k].label);
    CHECK_FALSE(ideal_equiv(fixture, fewer, order).equal);
  }
  CHECK(found);

  const std::vector<Relation> cubic = {{order.parse("a*b*c"), ""}};
  CHECK_THROWS_AS(ideal_equiv(cubic, fixture, order), NonQuadraticRelation);
}

TEST_CASE("bialgebra and comodules") {
  const Outcome bi = bialgebra_check(matrix_preset(), t_matrix());
  CHECK_MESSAGE(bi.pass, bi.witness);
  const Outcome left = comodule_check(superspace_coaction(), matrix_preset(), t_matrix());
  CHECK_MESSAGE(left.pass, left.witness);
  const Outcome dual = comodule_check(dual_coaction(), matrix_preset(), t_matrix());
  CHECK_MESSAGE(dual.pass, dual.witness);
}

TEST_CASE("the counit kills every relation") {
  const Presentation& m = matrix_preset();
  Images eps;
  const PolyMatrix& t = t_matrix();
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j) {
      REQUIRE(t(i, j).terms().size() == 1);
      eps[t(i, j).terms().begin()->first.front()] = SuperPolynomial(i == j ? 1 : 0);
    }
  for (const auto& r : m.relations()) CHECK_MESSAGE(apply_hom(r.poly, eps).is_zero(), r.label);
}
