#pragma once

// Presented super algebras: graded generators, oriented rewrite rules and a
// degree-lexicographic word order given by generator precedence.
//
// Termination uses the measure (odd level, word): a rule is admissible when
// every right-hand term whose coefficient has a nonzero parameter-free part
// carries a word strictly below the left-hand side. Terms whose coefficient
// lies entirely in the odd-parameter ideal raise the odd level, which is
// bounded because odd parameters are nilpotent.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qsuper/superpoly.hpp"

namespace qsuper {

struct GeneratorSpec {
  std::string name;
  Parity parity;
};

struct RewriteRule {
  Word lhs;
  SuperPolynomial rhs;
  std::string label;
};

/// A defining relation r (read as r = 0) with its source label.
struct Relation {
  SuperPolynomial poly;
  std::string label;
};

struct CriticalPair {
  Word overlap;
  std::size_t rule_a;
  std::size_t rule_b;
  SuperPolynomial reduced_a;
  SuperPolynomial reduced_b;
};

struct ConfluenceReport {
  bool confluent = true;
  std::size_t pairs_checked = 0;
  std::optional<CriticalPair> failure;
  std::string str() const;
};

class Presentation {
 public:
  Presentation() = default;

  /// Orients relations one at a time: each is reduced by the rules found so
  /// far, dropped (and remembered as redundant) if it reduces to zero, and
  /// otherwise turned into a rule whose left side is the largest word with a
  /// parameter-free coefficient part. Generators are listed in ascending
  /// precedence.
  static Presentation from_relations(std::string name, const std::vector<GeneratorSpec>& generators,
                                     const std::vector<Relation>& relations);
  /// Uses the given rules verbatim after checking admissibility.
  static Presentation from_rules(std::string name, const std::vector<GeneratorSpec>& generators,
                                 std::vector<RewriteRule> rules);

  const std::string& name() const { return name_; }
  const std::vector<GenId>& generators() const { return gens_; }
  std::vector<GeneratorSpec> generator_specs() const;
  const std::vector<RewriteRule>& rules() const { return rules_; }
  /// The relations the presentation was built from (rules as lhs - rhs when
  /// built from rules).
  const std::vector<Relation>& relations() const { return relations_; }
  const std::vector<Relation>& redundant() const { return redundant_; }

  GenId gen(std::string_view name) const;
  bool has_generator(GenId g) const;
  int rank(GenId g) const;
  /// Degree-lexicographic comparison under the generator precedence.
  bool word_less(const Word& a, const Word& b) const;

  SuperPolynomial parse(std::string_view text) const;
  SuperPolynomial normal_form(const SuperPolynomial& x) const;
  bool is_irreducible(const Word& w) const;
  ConfluenceReport check_local_confluence(std::size_t max_length = 4) const;

  /// Same generators and rules with every coefficient transformed.
  template <class F>
  Presentation map_coefficients(std::string new_name, F&& f) const;

 private:
  void index_rules();
  void check_rule(const RewriteRule& r) const;
  std::optional<std::pair<std::size_t, std::size_t>> find_match(const Word& w) const;
  void register_gens(const std::vector<GeneratorSpec>& generators);

  std::string name_;
  std::vector<GenId> gens_;
  std::vector<int> rank_;  // indexed by GenId, -1 when absent
  std::vector<RewriteRule> rules_;
  std::vector<std::vector<std::size_t>> by_first_;  // indexed by rank
  std::vector<Relation> relations_;
  std::vector<Relation> redundant_;
};

SuperPolynomial normal_form(const SuperPolynomial& x, const Presentation& p);
ConfluenceReport check_local_confluence(const Presentation& p);

/// Graded tensor product of presentations. Factor k's generators are renamed
/// "name@k" (k from 1) and ranked above all generators of earlier factors;
/// cross rules a@j b@i -> (-1)^{|a||b|} b@i a@j for j > i.
Presentation tensor_product(const std::vector<const Presentation*>& factors, std::string name = "");
Presentation tensor_square(const Presentation& p);

/// Generator of factor k (from 1) in a tensor product.
GenId tensor_generator(GenId g, int factor);
/// Word of factor k in a tensor product.
Word tensor_word(const Word& w, int factor);
/// Embeds x as the k-th tensor factor.
SuperPolynomial embed_factor(const SuperPolynomial& x, int factor);

template <class F>
Presentation Presentation::map_coefficients(std::string new_name, F&& f) const {
  Presentation r = *this;
  r.name_ = std::move(new_name);
  for (auto& rule : r.rules_) rule.rhs = rule.rhs.map_coefficients(f);
  for (auto& rel : r.relations_) rel.poly = rel.poly.map_coefficients(f);
  for (auto& rel : r.redundant_) rel.poly = rel.poly.map_coefficients(f);
  for (const auto& rule : r.rules_) r.check_rule(rule);
  return r;
}

}  // namespace qsuper
