#include "doctest.h"

#include "qsuper/errors.hpp"
#include "qsuper/fixtures.hpp"
#include "qsuper/liesuper.hpp"

using namespace qsuper;

TEST_CASE("exponential realization is stable in the truncation order") {
  for (int n = 2; n <= 6; ++n) {
    const ExpCheck c = exp_relation_check(n);
    CHECK(c.order == n);
    CHECK_MESSAGE(c.overall.pass, "N=" << n << ": " << c.overall.witness);
    CHECK(c.relations.size() >= 4);
    for (const auto& r : c.relations) CHECK_MESSAGE(r.outcome.pass, "N=" << n << " " << r.label);
  }
  CHECK_THROWS_AS(exp_relation_check(1), TruncationTooSmall);
}

TEST_CASE("a wrong commutation factor is detected") {
  const Presentation& apq = preset("Apq12");
  std::vector<Relation> rels = apq.relations();
  bool replaced = false;
  for (auto& r : rels) {
    const SuperPolynomial d = apq.normal_form(r.poly - apq.parse("X*Theta1 - q*Theta1*X"));
    if (d.is_zero() || apq.normal_form(r.poly + apq.parse("X*Theta1 - q*Theta1*X")).is_zero()) {
      r.poly = apq.parse("X*Theta1 - q^2*Theta1*X");
      replaced = true;
    }
  }
  REQUIRE(replaced);
  const Presentation bad = Presentation::from_relations("bad", apq.generator_specs(), rels);
  // order 2 already sees the discrepancy at first order in hbar1
  for (int n : {2, 4}) CHECK_FALSE(exp_relation_check(n, &bad).overall.pass);
  CHECK(exp_relation_check(4, &apq).overall.pass);
}

TEST_CASE("commutator with u in the enveloping algebra") {
  const Presentation& lie = lie_presentation();
  const GenId u = lie.gen("u"), xi1 = lie.gen("xi1");
  CHECK(lie.is_irreducible(Word{xi1, u}) != lie.is_irreducible(Word{u, xi1}));
  const SuperPolynomial d = lie.normal_form(lie.parse("u*xi1 - xi1*u - i*hbar1*xi1"));
  CHECK(d.is_zero());
  CHECK(lie.normal_form(lie.parse("xi1*xi2*xi1")).is_zero());
  CHECK(lie.check_local_confluence().confluent);
}

TEST_CASE("primitive Hopf structure") {
  const HopfVerdict v = primitive_hopf_check();
  CHECK_MESSAGE(v.overall.pass, v.overall.witness);
  CHECK(v.coproduct_hom.pass);
  CHECK(v.counit.pass);
  CHECK(v.antipode_laws.pass);
}

TEST_CASE("matrix homomorphism preserves brackets") {
  const MatrixImages m = lie_matrix_images();
  CHECK(m.images.size() == 3);
  const Outcome o = mu_check();
  CHECK_MESSAGE(o.pass, o.witness);
  // odd images square to zero
  const Presentation& lie = lie_presentation();
  for (const char* g : {"xi1", "xi2"}) {
    const ScalarMatrix& x = m.images.at(lie.gen(g));
    CHECK((x * x).is_zero());
  }
}
