#pragma once

// Contractions: a parameter-dependent change of coordinates X = g x applied
// to relations or to an R-matrix, followed by the limit (p, q) -> (1, 1).

#include <map>
#include <string>
#include <vector>

#include "qsuper/graded_matrix.hpp"
#include "qsuper/outcome.hpp"
#include "qsuper/presentation.hpp"

namespace qsuper {

struct BasisChange {
  std::string name;
  ScalarMatrix g;
  std::string cite;
};

/// "full", "h-only" or "hprime-only" from the fixture, over parities `par`.
BasisChange basis_change(const std::string& name, const Parities& par);
std::vector<std::string> basis_change_names();

struct ContractionRoute {
  std::string name;
  std::string source;  // preset in the old coordinates
  std::vector<std::string> old_coords, new_coords;
  Parities parities;
  std::string limit_target;     // preset expected after the limit
  std::string prelimit_target;  // optional preset expected before the limit
};

/// "superspace" or "exterior".
ContractionRoute contraction_route(const std::string& name);
/// Point of the limit, (p, q) = (1, 1).
std::map<std::string, GaussRational> contraction_point();

/// Substitutes old_i = sum_j g_ij new_j into every defining relation of src
/// and returns a minimal generating set of the resulting Grassmann span,
/// ordered by the generator precedence of `order`.
std::vector<Relation> transform_relations(const ScalarMatrix& g, const Presentation& src,
                                          const std::vector<GenId>& old_coords, const std::vector<GenId>& new_coords,
                                          const Presentation& order);
/// Coefficientwise limit followed by re-extraction of a minimal generating
/// set. Throws PoleAtLimit.
std::vector<Relation> limit_relations(const std::vector<Relation>& rels, const std::map<std::string, GaussRational>& point,
                                      const Presentation& order);

/// Odd parameter names occurring in the relations.
std::vector<std::string> odd_params_in(const std::vector<Relation>& rels);

/// Passes when both sets span the same Grassmann module of quadratic
/// relations and have the same size. Printed relations that are not in the
/// reduced echelon form of the derived set are listed in the notes.
Outcome verbatim_match(const std::vector<Relation>& derived, const std::vector<Relation>& printed,
                       const Presentation& order);

struct ContractionResult {
  std::vector<Relation> prelimit;
  std::vector<Relation> limit;
  Outcome prelimit_match;  // against the route's pre-limit preset, if any
  Outcome limit_match;     // against the route's limit preset
};

ContractionResult contract(const std::string& route, const std::string& basis_change_name);

struct RMatrixContraction {
  KronMode mode;
  ScalarMatrix conjugated;  // (g (x) g)^-1 Rhat (g (x) g)
  ScalarMatrix limit;
  Outcome match;  // against the printed Rhat_{h,h'}
};

/// Conjugates by g (x) g in the given Kronecker convention and takes the
/// limit entrywise; every entry must be pole-free at the point.
RMatrixContraction contract_rmatrix(const ScalarMatrix& rhat, const ScalarMatrix& g, KronMode mode,
                                    const ScalarMatrix& expected);

/// The Kronecker convention under which contraction reproduces the printed
/// two-parameter R-matrix (first of Graded, GradedAlt). Cached.
KronMode reproducing_kron_mode();

}  // namespace qsuper
