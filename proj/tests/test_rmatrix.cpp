#include "doctest.h"

#include "qsuper/contraction.hpp"
#include "qsuper/fixtures.hpp"
#include "qsuper/parse.hpp"
#include "qsuper/relspan.hpp"
#include "qsuper/rmatrix.hpp"
#include "support.hpp"

using namespace qsuper;

namespace {

const Parities& par() { return superspace_parities(); }

ScalarMatrix body_of(const ScalarMatrix& m) {
  return m.map([](const GrassmannScalar& e) { return GrassmannScalar(e.body()); });
}

ScalarMatrix perm_for(KronMode m) { return super_permutation(par(), m != KronMode::Ungraded); }

std::vector<GenId> coords(const Presentation& p, std::initializer_list<const char*> names) {
  std::vector<GenId> out;
  for (const char* n : names) out.push_back(p.gen(n));
  return out;
}

/// Adds a parity-compatible perturbation at (i, j).
ScalarMatrix mutate(ScalarMatrix m, std::size_t i, std::size_t j) {
  const Parities cp = composite_parities(par(), par());
  m(i, j) += (cp[i] + cp[j]) & 1 ? GrassmannScalar::odd_param("h") : GrassmannScalar(1);
  return m;
}

}  // namespace

TEST_CASE("fixture entries") {
  const ScalarMatrix pq = build_rhat_pq().rhat;
  CHECK(pq(1, 3) == parse_scalar("q"));
  CHECK(pq(2, 6) == parse_scalar("p*q"));
  CHECK(pq(4, 4) == parse_scalar("-1"));
  const ScalarMatrix hh = build_rhat_hh().rhat;
  CHECK(hh(0, 0) == parse_scalar("1 + h*h'"));
  CHECK(hh(8, 8) == parse_scalar("h*h' - 1"));
  CHECK(hh.is_even_supermatrix());
  CHECK(pq.is_even_supermatrix());
  CHECK(body_of(build_r_h("h")) == ScalarMatrix::identity(composite_parities(par(), par())));
}

TEST_CASE("braid equation") {
  const KronMode g = reproducing_kron_mode();
  CHECK(braid_check(build_rhat_pq().rhat, par(), g).pass);
  CHECK(braid_check(build_rhat_hh().rhat, par(), g).pass);
  CHECK(braid_check(ScalarMatrix::identity(composite_parities(par(), par())), par(), KronMode::Ungraded).pass);
  CHECK(braid_check(super_permutation(par()), par(), g).pass);
  const Outcome bad = braid_check(mutate(build_rhat_hh().rhat, 1, 3), par(), g);
  CHECK_FALSE(bad.pass);
  CHECK(bad.witness.find("entry") != std::string::npos);
}

TEST_CASE("Yang-Baxter equation for the one-parameter factors") {
  for (KronMode m : {reproducing_kron_mode(), KronMode::Ungraded}) {
    CHECK(ybe_check(build_r_h("h"), par(), m).pass);
    CHECK(ybe_check(build_r_h("h'"), par(), m).pass);
  }
  CHECK(ybe_check(perm_for(reproducing_kron_mode()) * build_rhat_pq().rhat, par(), reproducing_kron_mode()).pass);
  const Outcome bad = ybe_check(mutate(build_r_h("h"), 1, 3), par(), reproducing_kron_mode());
  CHECK_FALSE(bad.pass);
  CHECK_FALSE(bad.witness.empty());
}

TEST_CASE("braid and Yang-Baxter checks agree") {
  std::vector<ScalarMatrix> cases = {build_rhat_pq().rhat, build_rhat_hh().rhat, super_permutation(par()),
                                     ScalarMatrix::identity(composite_parities(par(), par()))};
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> idx(0, 8);
  for (int n = 0; n < 8; ++n) cases.push_back(mutate(cases[static_cast<std::size_t>(n % 2)], idx(rng), idx(rng)));
  for (KronMode m : {KronMode::Graded, KronMode::GradedAlt, KronMode::Ungraded})
    for (const auto& rhat : cases)
      CHECK(braid_check(rhat, par(), m).pass == ybe_check(perm_for(m) * rhat, par(), m).pass);
}

TEST_CASE("involutivity and projectors") {
  const ScalarMatrix hh = build_rhat_hh().rhat;
  CHECK(involutive_check(hh).pass);
  CHECK(involutive_check(super_permutation(par())).pass);
  const Outcome pq = involutive_check(build_rhat_pq().rhat);
  CHECK_FALSE(pq.pass);
  CHECK_FALSE(pq.witness.empty());
  CHECK(projector_laws(hh).pass);
  CHECK(projector_laws(super_permutation(par())).pass);
  CHECK_THROWS_AS(projectors(build_rhat_pq().rhat), NotInvolutive);

  const Projectors p = projectors(hh);
  const ScalarMatrix id = ScalarMatrix::identity(hh.row_parities());
  CHECK(p.plus + p.minus == id);
  CHECK(p.plus * p.plus == p.plus);
  CHECK(p.minus * p.minus == p.minus);
  CHECK((p.plus * p.minus).is_zero());
  CHECK((p.minus * p.plus).is_zero());
  CHECK(p.plus - p.minus == hh);
}

TEST_CASE("kernel relations") {
  const Projectors p = projectors(build_rhat_hh().rhat);
  const Presentation& ah = preset("Ah12");
  const auto minus = kernel_relations(p.minus, coords(ah, {"x", "theta1", "theta2"}), KernelSign::None);
  CHECK(ideal_equiv(minus, ah.relations(), ah).equal);
  const Presentation& ahp = preset("Ah'21");
  const auto plus = kernel_relations(p.plus, coords(ahp, {"phi", "y1", "y2"}), KernelSign::SecondFactor);
  CHECK(ideal_equiv(plus, ahp.relations(), ahp).equal);

  // a different generating set spans the same ideal
  std::vector<Relation> mixed = minus;
  for (std::size_t k = 1; k < mixed.size(); ++k) mixed[k].poly = mixed[k].poly + mixed[0].poly.left_scaled(GrassmannScalar(k));
  CHECK(ideal_equiv(mixed, minus, ah).equal);

  const Projectors p0 = projectors(body_of(build_rhat_hh().rhat));
  CHECK(kernel_relations(p0.minus, coords(ah, {"x", "theta1", "theta2"}), KernelSign::None).size() == 5);
  CHECK(kernel_relations(p0.plus, coords(ahp, {"phi", "y1", "y2"}), KernelSign::SecondFactor).size() == 4);
}

TEST_CASE("compact form") {
  const Presentation& ah = preset("Ah12");
  CHECK(compact_form_check(build_rhat_hh().rhat, ah, coords(ah, {"x", "theta1", "theta2"}), 1).pass);
  const Presentation& aq = preset("Aq12");
  CHECK(compact_form_check(build_rhat_pq().rhat, aq, coords(aq, {"X", "Theta1", "Theta2"}), parse_scalar("p")).pass);
  const Presentation& apq = preset("Apq12");
  CHECK_FALSE(
      compact_form_check(build_rhat_pq().rhat, apq, coords(apq, {"X", "Theta1", "Theta2"}), parse_scalar("p")).pass);
  // the identity only holds modulo relations that kill every quadratic word
  const Presentation free = free_presentation(coords(ah, {"x", "theta1", "theta2"}));
  CHECK(compact_form_check(ScalarMatrix::identity(composite_parities(par(), par())), free,
                           coords(ah, {"x", "theta1", "theta2"}), 1)
            .pass);
  CHECK_FALSE(compact_form_check(super_permutation(par()), free, coords(ah, {"x", "theta1", "theta2"}), 1).pass);
}

TEST_CASE("decomposition at hh' = 0") {
  const DecomposeResult d = decompose_check();
  CHECK(d.outcome.pass);
  const OddMask hh = parse_scalar("h*h'").odd_support();
  for (std::size_t i = 0; i < d.defect.rows(); ++i)
    for (std::size_t j = 0; j < d.defect.cols(); ++j)
      for (const auto& [mask, c] : d.defect(i, j).components()) CHECK((mask & hh) == hh);
  CHECK_FALSE(d.defect.is_zero());
  // with h = 0 the two-parameter matrix is R(h')
  const ScalarMatrix rhp = supertranspose(rename_odd_param(build_r_h("h"), "h", "h'"), d.convention);
  CHECK(ybe_check(rhp, par(), reproducing_kron_mode()).pass);
  const OddMask h = parse_scalar("h").odd_support();
  const ScalarMatrix r0 = (super_permutation(par()) * build_rhat_hh().rhat).map([&](const GrassmannScalar& e) {
    return e.drop_containing(h);
  });
  CHECK(r0 == rhp);
}
