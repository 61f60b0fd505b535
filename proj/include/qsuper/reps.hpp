#pragma once

// Explicit matrix representations over the Grassmann scalars, checked
// against their presentations under both multiplication orders.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsuper/contraction.hpp"
#include "qsuper/graded_matrix.hpp"
#include "qsuper/outcome.hpp"
#include "qsuper/presentation.hpp"

namespace qsuper {

/// Left: rho(ab) = rho(a) rho(b). Opposite: rho(ab) = rho(b) rho(a).
enum class RepConvention { Left, Opposite };
std::string rep_convention_name(RepConvention c);

struct RepresentationSpec {
  std::string name;
  std::vector<std::string> aliases;
  const Presentation* algebra = nullptr;
  std::map<GenId, ScalarMatrix> images;
  bool claimed = true;  // the text asserts that the relations hold
  std::string cite;
  /// Representation, basis change and route this one is derived from.
  std::optional<std::array<std::string, 3>> derived_from;
};

/// By name or alias.
RepresentationSpec representation(const std::string& name);
std::vector<std::string> representation_names();

struct RelationVerdict {
  std::string label;
  std::size_t terms = 0;
  bool pass = true;
  std::string witness;
};

struct RepCheck {
  RepConvention convention;
  std::vector<RelationVerdict> relations;
  /// Fails with the failing relation of fewest terms, its first nonzero
  /// entry and the substituted images.
  Outcome outcome;
};

/// Throws MissingImage if a generator has no image.
RepCheck rep_check(const RepresentationSpec& spec, RepConvention convention);

/// Images of the new coordinates, rho(new_i) = sum_j (g^-1)_ij rho(old_j).
RepresentationSpec transform_rep(const RepresentationSpec& spec, const BasisChange& bc, const ContractionRoute& route);

struct RepAdjudication {
  RepresentationSpec spec;
  RepCheck left, opposite;
  std::vector<RepConvention> validating;
  /// Entrywise comparison with the images rebuilt from derived_from.
  std::optional<Outcome> derived_match;
};

RepAdjudication adjudicate(const std::string& name);

}  // namespace qsuper
