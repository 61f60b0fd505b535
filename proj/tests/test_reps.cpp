#include "doctest.h"

#include "qsuper/contraction.hpp"
#include "qsuper/errors.hpp"
#include "qsuper/fixtures.hpp"
#include "qsuper/reps.hpp"
#include "qsuper/rmatrix.hpp"
#include "support.hpp"

using namespace qsuper;

namespace {

ScalarMatrix transposed(const ScalarMatrix& m) {
  ScalarMatrix t(m.col_parities(), m.row_parities());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

ScalarMatrix evaluate(const SuperPolynomial& x, const RepresentationSpec& s, RepConvention c) {
  const std::size_t n = s.images.begin()->second.rows();
  const Parities flat(n, 0);
  ScalarMatrix sum(flat, flat);
  for (const auto& [w, coef] : x.terms()) {
    ScalarMatrix prod = ScalarMatrix::identity(flat);
    for (GenId g : w) prod = c == RepConvention::Left ? prod * s.images.at(g) : s.images.at(g) * prod;
    sum = sum + prod.map([&](const GrassmannScalar& e) { return coef * e; });
  }
  return sum;
}

std::vector<bool> verdicts(const RepCheck& r) {
  std::vector<bool> out;
  for (const auto& v : r.relations) out.push_back(v.pass);
  return out;
}

// Word reversal picks up a Koszul sign that depends on the number of odd
// letters, so the transpose duality is exact only when every term of a
// relation has the same count.
bool uniform_odd_count(const Presentation& p) {
  for (const auto& r : p.relations()) {
    int count = -1;
    for (const auto& [w, c] : r.poly.terms()) {
      int odd = 0;
      for (GenId g : w) odd += generator_parity(g) == Parity::Odd;
      if (count >= 0 && odd != count) return false;
      count = odd;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("both conventions are adjudicated") {
  const RepAdjudication q = adjudicate("2.2");
  CHECK_FALSE(q.left.outcome.pass);
  CHECK(q.opposite.outcome.pass);
  REQUIRE(q.validating.size() == 1);
  CHECK(q.validating[0] == RepConvention::Opposite);

  const RepAdjudication e = adjudicate("2.6");
  CHECK_FALSE(e.left.outcome.pass);
  CHECK(e.opposite.outcome.pass);

  const RepAdjudication pq = adjudicate("6.2");
  CHECK(pq.validating.empty());
  CHECK(pq.left.outcome.witness.find("entry") != std::string::npos);
  CHECK(pq.left.outcome.witness.find("eps1") != std::string::npos);
}

TEST_CASE("the transformed matrices are rebuilt from the basis change") {
  const RepAdjudication t = adjudicate("3.2");
  REQUIRE(t.derived_match.has_value());
  CHECK_MESSAGE(t.derived_match->pass, t.derived_match->witness);
  CHECK(t.spec.name == "superspace-transformed");
}

TEST_CASE("opposite convention equals left convention on transposed images") {
  for (const auto& n : representation_names()) {
    const RepresentationSpec s = representation(n);
    if (!uniform_odd_count(*s.algebra)) continue;
    RepresentationSpec t = s;
    for (auto& [g, m] : t.images) m = transposed(m);
    CHECK_MESSAGE(verdicts(rep_check(s, RepConvention::Opposite)) == verdicts(rep_check(t, RepConvention::Left)), n);
    CHECK_MESSAGE(verdicts(rep_check(s, RepConvention::Left)) == verdicts(rep_check(t, RepConvention::Opposite)), n);
  }
}

TEST_CASE("identity basis change leaves the images unchanged") {
  const RepresentationSpec s = representation("2.2");
  const BasisChange id{"identity", ScalarMatrix::identity(superspace_parities()), ""};
  const ContractionRoute route = contraction_route("superspace");
  const RepresentationSpec t = transform_rep(s, id, route);
  const Presentation& target = preset(route.limit_target);
  for (std::size_t i = 0; i < route.old_coords.size(); ++i)
    CHECK(t.images.at(target.gen(route.new_coords[i])) == s.images.at(s.algebra->gen(route.old_coords[i])));
}

TEST_CASE("trivial representation of the supercommutative algebra") {
  const Presentation& aq = preset("Aq12");
  const std::vector<Relation> rels = {{aq.parse("X*Theta1 - Theta1*X"), "c1"},
                                      {aq.parse("X*Theta2 - Theta2*X"), "c2"},
                                      {aq.parse("Theta1*Theta2 + Theta2*Theta1"), "c3"},
                                      {aq.parse("Theta1^2"), "c4"},
                                      {aq.parse("Theta2^2"), "c5"}};
  const Presentation comm = Presentation::from_relations("comm", aq.generator_specs(), rels);
  RepresentationSpec s;
  s.name = "trivial";
  s.algebra = &comm;
  const Parities flat(3, 0);
  s.images[comm.gen("X")] = ScalarMatrix::identity(flat);
  s.images[comm.gen("Theta1")] = ScalarMatrix(flat, flat);
  s.images[comm.gen("Theta2")] = ScalarMatrix(flat, flat);
  CHECK(rep_check(s, RepConvention::Left).outcome.pass);
  CHECK(rep_check(s, RepConvention::Opposite).outcome.pass);
  s.images.erase(comm.gen("Theta2"));
  CHECK_THROWS_AS(rep_check(s, RepConvention::Left), MissingImage);
}

TEST_CASE("a validated convention respects every consequence up to length 4") {
  std::mt19937_64 rng(5);
  for (const auto& n : representation_names()) {
    const RepAdjudication a = adjudicate(n);
    const Presentation& p = *a.spec.algebra;
    for (RepConvention c : a.validating)
      for (int k = 0; k < 150; ++k) {
        const Word w = testing::random_word(rng, p.generators(), 4);
        const SuperPolynomial x(w, GrassmannScalar(1));
        REQUIRE_MESSAGE(evaluate(x, a.spec, c) == evaluate(p.normal_form(x), a.spec, c), n << " " << word_str(w));
      }
  }
}

TEST_CASE("verdicts do not depend on specializing the free parameters") {
  // a pass must survive eps1 -> 0, and so must the failure, through eps2
  const RepresentationSpec s = representation("2.2");
  RepresentationSpec z = s;
  const OddMask e1 = GrassmannScalar::odd_param("eps1").odd_support();
  for (auto& [g, m] : z.images) m = m.map([&](const GrassmannScalar& e) { return e.drop_containing(e1); });
  CHECK(rep_check(z, RepConvention::Opposite).outcome.pass);
  const RepCheck left = rep_check(s, RepConvention::Left);
  CHECK(left.outcome.witness.find("eps") != std::string::npos);
  CHECK_FALSE(rep_check(z, RepConvention::Left).outcome.pass);
}

TEST_CASE("unknown representation") { CHECK_THROWS_AS(representation("9.9"), UnknownPreset); }
