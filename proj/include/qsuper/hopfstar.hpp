#pragma once

// Hopf structure maps on a presentation and star structures, including
// stars induced through a change of coordinates.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsuper/contraction.hpp"
#include "qsuper/grassmann.hpp"
#include "qsuper/morphism.hpp"
#include "qsuper/outcome.hpp"
#include "qsuper/presentation.hpp"

namespace qsuper {

struct CostructureSpec {
  std::string name;
  const Presentation* algebra = nullptr;
  Images coproduct;  // in the tensor square, factors tagged @1 and @2
  std::map<GenId, GrassmannScalar> counit;
  Images antipode;
  const Presentation* antipode_target = nullptr;
  std::string cite;
};

/// "FAq12" or "Lie" from the fixture.
CostructureSpec costructure(const std::string& name);
std::vector<std::string> costructure_names();

/// One way of reading the antipode as a map of algebras.
struct AntipodeReading {
  bool antihomomorphism;
  AntiSign sign;  // meaningful for antihomomorphisms only
  const Presentation* target;
  Outcome outcome;
  std::string str() const;
};

struct HopfVerdict {
  Outcome coproduct_hom;     // Delta(r) = 0 in the tensor square
  Outcome coassociativity;   // on generators
  Outcome counit;            // eps(r) = 0 and both counit laws
  Outcome antipode_laws;     // m(S (x) id)Delta = eps = m(id (x) S)Delta, both signs
  /// Antihomomorphism into the declared target under each sign, then the
  /// antihomomorphism into the algebra itself and the homomorphism into the
  /// declared target.
  std::vector<AntipodeReading> readings;
  /// Sign under which S is an antihomomorphism into the declared target.
  std::optional<AntiSign> winning_sign;
  Outcome overall;
};

HopfVerdict hopf_check(const CostructureSpec& cs);

enum class StarFlavor { Star, Superstar };

struct InvolutionSpec {
  std::string name;
  const Presentation* algebra = nullptr;
  Images images;
  ConjugationSpec conj;
  StarFlavor flavor = StarFlavor::Star;
  std::string cite;
};

/// Registers the conjugate symbols of the odd parameters.
void register_conjugate_symbols();
/// "Aq12", "Apq21", "Ah12" or "Ah'21" from the fixture.
InvolutionSpec involution(const std::string& name);
std::vector<std::string> involution_names();

/// Extension of the generator images to p: antimultiplicative with
/// conjugated coefficients for a star, multiplicative for a superstar.
SuperPolynomial apply_involution(const SuperPolynomial& p, const InvolutionSpec& inv);

/// Every relation is mapped into the ideal, and the square of the map is the
/// identity on generators (minus the identity on odd generators for a
/// superstar).
Outcome star_check(const InvolutionSpec& inv);

struct InducedStar {
  /// Images on the new coordinates with generic conjugates of the odd
  /// parameters, before the constraints.
  Images generic;
  /// After the constraints and the limit.
  InvolutionSpec induced;
  /// Equality with the expected involution on every generator.
  Outcome match;
  /// star_check of the induced involution on the limit algebra.
  Outcome closure;
  /// Generic images against the recorded pre-constraint forms, if any.
  Outcome pre_constraint;
  std::string cite;
};

/// Conjugation maps are given by name as for ConjugationSpec; constraint
/// values are "[-]name".
struct StarInduction {
  std::map<std::string, std::string> generic_even, generic_odd;
  std::map<std::string, std::string> constraints;
  /// Components containing all of these odd parameters are dropped before
  /// the limit (0 keeps everything).
  OddMask drop_mask = 0;
};

/// Pushes src through old = g new: new_i* = sum_j (old_j)* conj((g^-1)_ij).
/// Constraints substitute the conjugate symbols; throws
/// ConstraintUnsatisfied if a conjugate symbol or a pole at the limit
/// survives.
InducedStar induce_star(const BasisChange& bc, const ContractionRoute& route, const InvolutionSpec& src,
                        const StarInduction& how, const InvolutionSpec* expected);
/// "h-only", "hprime-only" or "full" from the fixture. With `first_order`
/// the product of the odd parameters of the basis change is dropped.
InducedStar induce_star(const std::string& induction, bool first_order = false);
std::vector<std::string> induction_names();

}  // namespace qsuper
