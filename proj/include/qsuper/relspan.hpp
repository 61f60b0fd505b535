#pragma once

// Exact linear algebra on finite sets of relations. A SuperPolynomial is
// expanded into a vector over the field of rational functions with one
// coordinate per (word, odd monomial). Closing a relation set under left
// multiplication by odd monomials turns the span into a module over the
// Grassmann coefficients, so span comparison decides equality of the
// degree-bounded parts of ideals.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsuper/presentation.hpp"

namespace qsuper {

class RelationModule {
 public:
  /// `order` supplies the word order (its rules are ignored); `closure` is the
  /// set of odd parameters used as multipliers.
  RelationModule(const Presentation& order, OddMask closure);

  /// Adds mu * r for every odd monomial mu over the closure.
  void add(const SuperPolynomial& r);
  bool contains(const SuperPolynomial& r) const;
  std::size_t rank() const { return rows_.size(); }

  /// Reduced row echelon basis. Columns are ordered by odd level, then by
  /// decreasing word, then by odd monomial, so every row starts at its
  /// largest word of lowest level with coefficient 1.
  std::vector<SuperPolynomial> echelon_basis() const;
  /// A minimal subset of the echelon basis generating the span as a module.
  std::vector<SuperPolynomial> generators() const;
  /// r scaled so that its leading coefficient is 1.
  SuperPolynomial monic(const SuperPolynomial& r) const;

 private:
  struct Col {
    int level;
    Word word;
    OddMask mask;
  };
  struct ColLess {
    const Presentation* order;
    bool operator()(const Col& a, const Col& b) const;
  };
  using Row = std::map<Col, RationalFunction, ColLess>;

  Row to_row(const SuperPolynomial& p) const;
  static SuperPolynomial from_row(const Row& r);
  void reduce(Row& r) const;
  void insert(Row r);

  const Presentation* order_;
  OddMask closure_;
  std::map<Col, Row, ColLess> rows_;  // keyed by pivot column
};

struct EquivVerdict {
  bool equal = true;
  /// A relation from one side missing from the other side's span.
  std::optional<Relation> witness;
  /// "first-not-in-second" or "second-not-in-first" when unequal.
  std::string direction;
  std::string str() const;
};

/// Compares the Grassmann spans of two sets of quadratic relations. Throws
/// NonQuadraticRelation if a word of length other than 2 occurs.
EquivVerdict ideal_equiv(const std::vector<Relation>& a, const std::vector<Relation>& b,
                         const Presentation& order);

/// Union of odd parameters occurring in the relations.
OddMask odd_support(const std::vector<Relation>& rels);

}  // namespace qsuper
