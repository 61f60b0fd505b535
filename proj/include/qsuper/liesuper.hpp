#pragma once

// The enveloping algebra of the Lie superalgebra spanned by u, xi1, xi2:
// truncated exponentials realizing the two-parameter superspace, the
// primitive Hopf structure and a 3x3 matrix homomorphism.

#include <string>
#include <vector>

#include "qsuper/hopfstar.hpp"
#include "qsuper/outcome.hpp"
#include "qsuper/presentation.hpp"

namespace qsuper {

const Presentation& lie_presentation();

struct ExpRelation {
  std::string label;
  Outcome outcome;
};

struct ExpCheck {
  int order = 0;
  std::vector<ExpRelation> relations;
  Outcome overall;
};

/// With X = e^u, Theta_k = e^{ku} xi_k, q = e^{i hbar1}, p = e^{i hbar2}, all
/// truncated at order N, checks every relation of the two-parameter
/// superspace after clearing denominators, modulo terms whose u-degree plus
/// hbar-degree exceeds N. `relations` replaces the superspace preset (it must
/// use the generators X, Theta1, Theta2). Throws TruncationTooSmall for N < 2.
ExpCheck exp_relation_check(int order = 6, const Presentation* relations = nullptr);

/// Hopf axioms of the primitive costructure.
HopfVerdict primitive_hopf_check();

/// Images of u, xi1, xi2 as 3x3 matrices over the Grassmann scalars.
struct MatrixImages {
  std::map<GenId, ScalarMatrix> images;
  std::string cite;
};
MatrixImages lie_matrix_images();

/// Every defining relation maps to the zero matrix, which is the graded
/// bracket identity for each pair of generators.
Outcome mu_check();

}  // namespace qsuper
