#pragma once

// Quantum supermatrices: relations on the entries of T from the FRT equation
// and from coaction on the quantum superspace and its dual, plus the matrix
// bialgebra and comodule structures.

#include <string>
#include <vector>

#include "qsuper/graded_matrix.hpp"
#include "qsuper/outcome.hpp"
#include "qsuper/presentation.hpp"

namespace qsuper {

/// The preset of the quantum supermatrix algebra and its matrix of
/// generators T, as recorded in the fixture.
const Presentation& matrix_preset();
const PolyMatrix& t_matrix();
/// Free algebra on the entries of T, in the preset's generator order.
const Presentation& free_t_algebra();

/// The nonzero entries of Rhat T1 T2 - T1 T2 Rhat with T1 = T (x) I and
/// T2 = P T1 P, both Kronecker products taken in `mode`.
std::vector<Relation> frt_relations(const ScalarMatrix& rhat, KronMode mode);

/// A space with coordinates x_1..x_n listed in matrix order; T acts by
/// x'_i = sum_k t_ik (x) x_k.
struct CoactedSpace {
  const Presentation* space;
  std::vector<GenId> coords;
};

/// Substitutes x' = T x into every relation of each space (entries of T
/// supercommute with the coordinates and are otherwise free), normal-orders
/// the coordinates and collects the coefficient of each coordinate word.
std::vector<Relation> coaction_relations(const std::vector<CoactedSpace>& spaces);

/// Coordinates of the two spaces acted on by T, from the contraction routes.
CoactedSpace superspace_coaction();
CoactedSpace dual_coaction();

struct FrtTriangle {
  Outcome frt_vs_coaction;
  Outcome frt_vs_fixture;
  Outcome coaction_vs_fixture;
};
FrtTriangle frt_triangle(const ScalarMatrix& rhat, KronMode mode);

/// Delta(t_ij) = sum_k t_ik (x) t_kj and eps(t_ij) = delta_ij: algebra map
/// property on every relation, coassociativity and counit laws on generators.
Outcome bialgebra_check(const Presentation& p, const PolyMatrix& t);

/// delta(x_i) = sum_k t_ik (x) x_k: algebra map property on every relation of
/// the space, coassociativity and counit law on coordinates.
Outcome comodule_check(const CoactedSpace& space, const Presentation& matrix, const PolyMatrix& t);

}  // namespace qsuper
