#include "doctest.h"

#include "qsuper/contraction.hpp"
#include "qsuper/errors.hpp"
#include "qsuper/fixtures.hpp"
#include "qsuper/parse.hpp"
#include "qsuper/relspan.hpp"
#include "qsuper/rmatrix.hpp"

#include <algorithm>

using namespace qsuper;

namespace {

const Parities& par() { return superspace_parities(); }

std::vector<GenId> ids(const Presentation& p, const std::vector<std::string>& names) {
  std::vector<GenId> out;
  for (const auto& n : names) out.push_back(p.gen(n));
  return out;
}

ScalarMatrix drop_param(const ScalarMatrix& m, const char* name) {
  const OddMask mask = parse_scalar(name).odd_support();
  return m.map([&](const GrassmannScalar& e) { return e.drop_containing(mask); });
}

}  // namespace

TEST_CASE("superspace contraction") {
  const ContractionResult r = contract("superspace", "full");
  CHECK_MESSAGE(r.prelimit_match.pass, r.prelimit_match.witness);
  CHECK_MESSAGE(r.limit_match.pass, r.limit_match.witness);
  const auto odd = odd_params_in(r.prelimit);
  CHECK(std::find(odd.begin(), odd.end(), "h'") == odd.end());
  CHECK(std::find(odd.begin(), odd.end(), "h") != odd.end());
  CHECK(ideal_equiv(r.limit, preset("Ah12").relations(), preset("Ah12")).equal);
}

TEST_CASE("exterior contraction") {
  const ContractionResult r = contract("exterior", "full");
  CHECK_MESSAGE(r.limit_match.pass, r.limit_match.witness);
  CHECK(ideal_equiv(r.limit, preset("Ah'21").relations(), preset("Ah'21")).equal);
}

TEST_CASE("identity basis change leaves relations unchanged") {
  const ContractionRoute route = contraction_route("superspace");
  const Presentation& src = preset(route.source);
  const auto old_ids = ids(src, route.old_coords);
  const auto rels = transform_relations(ScalarMatrix::identity(par()), src, old_ids, old_ids, src);
  CHECK(ideal_equiv(rels, src.relations(), src).equal);
}

TEST_CASE("basis change round trip") {
  const ContractionRoute route = contraction_route("superspace");
  const Presentation& src = preset(route.source);
  const Presentation& target = preset(route.limit_target);
  const ScalarMatrix g = basis_change("full", par()).g;
  const auto old_ids = ids(src, route.old_coords);
  const auto new_ids = ids(target, route.new_coords);
  const auto forward = transform_relations(g, src, old_ids, new_ids, target);
  const Presentation mid = Presentation::from_relations("mid", target.generator_specs(), forward);
  const auto back = transform_relations(mat_inv(g), mid, new_ids, old_ids, src);
  CHECK(ideal_equiv(back, src.relations(), src).equal);
}

TEST_CASE("singular basis changes are rejected") {
  const ContractionRoute route = contraction_route("superspace");
  const Presentation& src = preset(route.source);
  ScalarMatrix g = ScalarMatrix::identity(par());
  g(2, 2) = 0;
  const auto old_ids = ids(src, route.old_coords);
  CHECK_THROWS_AS(transform_relations(g, src, old_ids, old_ids, src), NonInvertibleBasisChange);
}

TEST_CASE("limits with a pole are refused") {
  const Presentation& ah = preset("Ah12");
  const std::vector<Relation> rels = {{ah.parse("x*theta1 - 1/(q-1)*theta1*x"), "constructed"}};
  CHECK_THROWS_AS(limit_relations(rels, contraction_point(), ah), PoleAtLimit);
  const std::vector<Relation> fine = {{ah.parse("x*theta1 - (q^2-1)/(q-1)*theta1*x"), "constructed"}};
  const auto lim = limit_relations(fine, contraction_point(), ah);
  REQUIRE(lim.size() == 1);
  CHECK(ideal_equiv(lim, {{ah.parse("x*theta1 - 2*theta1*x"), ""}}, ah).equal);
}

TEST_CASE("R-matrix contraction") {
  const KronMode m = reproducing_kron_mode();
  const ScalarMatrix pq = build_rhat_pq().rhat, hh = build_rhat_hh().rhat;
  const RMatrixContraction full = contract_rmatrix(pq, basis_change("full", par()).g, m, hh);
  CHECK_MESSAGE(full.match.pass, full.match.witness);
  CHECK(full.limit == hh);
  // before the limit the conjugate still braids
  CHECK(braid_check(full.conjugated, par(), m).pass);

  const RMatrixContraction trivial = contract_rmatrix(pq, ScalarMatrix::identity(par()), m, super_permutation(par()));
  CHECK(trivial.match.pass);

  const RMatrixContraction h_only = contract_rmatrix(pq, basis_change("h-only", par()).g, m, drop_param(hh, "h'"));
  CHECK_MESSAGE(h_only.match.pass, h_only.match.witness);
}

TEST_CASE("contracted relations agree with the kernel of the contracted projector") {
  const RMatrixContraction c =
      contract_rmatrix(build_rhat_pq().rhat, basis_change("full", par()).g, reproducing_kron_mode(), build_rhat_hh().rhat);
  const Presentation& ah = preset("Ah12");
  const auto kernel = kernel_relations(projectors(c.limit).minus, ids(ah, {"x", "theta1", "theta2"}), KernelSign::None);
  CHECK(ideal_equiv(kernel, contract("superspace", "full").limit, ah).equal);
}

TEST_CASE("unknown routes and basis changes") {
  CHECK_THROWS_AS(contraction_route("nowhere"), UnknownPreset);
  CHECK_THROWS_AS(basis_change("sideways", par()), UnknownPreset);
}
