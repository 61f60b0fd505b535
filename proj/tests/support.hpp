#pragma once

// Shared helpers for the test binaries: seeded random scalars and words, and
// a degree-truncated linear-algebra model of a presented algebra that does
// not use the rewriting machinery.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "qsuper/graded_matrix.hpp"
#include "qsuper/grassmann.hpp"
#include "qsuper/parse.hpp"
#include "qsuper/presentation.hpp"
#include "qsuper/relspan.hpp"

namespace qsuper::testing {

class RandomScalars {
 public:
  RandomScalars(std::uint64_t seed, std::vector<std::string> even, std::vector<std::string> odd)
      : rng_(seed), even_(std::move(even)), odd_(std::move(odd)) {}

  /// Sum of up to three terms c * m_even * m_odd, sometimes over a small
  /// denominator.
  GrassmannScalar scalar() {
    GrassmannScalar s;
    const int terms = pick(0, 3);
    for (int t = 0; t < terms; ++t) s = s + term();
    if (!even_.empty() && pick(0, 4) == 0) s = s * denominator().inverse();
    return s;
  }

  /// c * odd monomial with a rational-function coefficient.
  GrassmannScalar odd_monomial_scalar(int degree) {
    GrassmannScalar s = even_factor();
    std::vector<std::string> pool = odd_;
    std::shuffle(pool.begin(), pool.end(), rng_);
    for (int k = 0; k < degree && k < static_cast<int>(pool.size()); ++k) s = s * GrassmannScalar::odd_param(pool[k]);
    return s;
  }

  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937_64& rng() { return rng_; }

 private:
  GrassmannScalar even_factor() {
    int num = pick(-5, 5);
    GrassmannScalar s(GaussRational(mpq_class(num == 0 ? 1 : num, pick(1, 3))));
    for (const auto& e : even_)
      if (const int k = pick(-2, 2)) s = s * GrassmannScalar::even_param(e, k);
    return s;
  }
  GrassmannScalar term() {
    GrassmannScalar s = even_factor();
    for (const auto& o : odd_)
      if (pick(0, 2) == 0) s = s * GrassmannScalar::odd_param(o);
    return s;
  }
  GrassmannScalar denominator() {
    const std::string& e = even_[static_cast<std::size_t>(pick(0, static_cast<int>(even_.size()) - 1))];
    return GrassmannScalar::even_param(e) + GrassmannScalar(pick(1, 3));
  }

  std::mt19937_64 rng_;
  std::vector<std::string> even_, odd_;
};

/// Entry (i, j) homogeneous of parity rows[i] + cols[j].
inline ScalarMatrix random_even_supermatrix(RandomScalars& gen, const Parities& rows, const Parities& cols) {
  ScalarMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const int par = (rows[i] + cols[j]) & 1;
      if (gen.pick(0, 3) == 0) continue;
      m(i, j) = gen.odd_monomial_scalar(par) + gen.odd_monomial_scalar(par + 2);
    }
  return m;
}

inline Word random_word(std::mt19937_64& rng, const std::vector<GenId>& gens, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  Word w(static_cast<std::size_t>(len(rng)));
  for (auto& g : w) g = gens[pick(rng)];
  return w;
}

/// All words of length <= max_len.
inline std::vector<Word> all_words(const std::vector<GenId>& gens, std::size_t max_len) {
  std::vector<Word> out{Word{}}, layer{Word{}};
  for (std::size_t n = 1; n <= max_len; ++n) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (GenId g : gens) {
        Word x = w;
        x.push_back(g);
        next.push_back(x);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

/// The degree <= D part of the two-sided ideal of a presentation, as a
/// vector space over the rational functions with one coordinate per
/// (word, odd monomial). Rows are mu * u * r * v for defining relations r,
/// words u, v and odd monomials mu over the parameters of the relations.
class TruncatedIdeal {
 public:
  struct Coord {
    Word word;
    OddMask mask;
    bool operator<(const Coord& o) const {
      if (word.size() != o.word.size()) return word.size() > o.word.size();
      if (word != o.word) return word > o.word;
      return mask > o.mask;
    }
  };
  using Vec = std::map<Coord, RationalFunction>;

  TruncatedIdeal(const Presentation& p, std::size_t degree) : degree_(degree) {
    std::vector<const Relation*> rels;
    for (const auto& r : p.relations()) rels.push_back(&r);
    for (const auto& r : p.redundant()) rels.push_back(&r);
    OddMask closure = 0;
    for (const auto* r : rels)
      for (const auto& [w, c] : r->poly.terms()) closure |= c.odd_support();
    for (OddMask m = closure;; m = (m - 1) & closure) {
      masks_.push_back(m);
      if (m == 0) break;
    }
    const auto words = all_words(p.generators(), degree);
    for (const auto* r : rels) {
      const std::size_t len = r->poly.max_length();
      if (len > degree) continue;
      for (const auto& u : words) {
        if (u.size() + len > degree) continue;
        for (const auto& v : words) {
          if (u.size() + v.size() + len > degree) continue;
          const SuperPolynomial base = SuperPolynomial(u) * r->poly * SuperPolynomial(v);
          for (OddMask m : masks_) insert(expand(base.left_scaled(GrassmannScalar::odd_monomial(m))));
        }
      }
    }
  }

  static Vec expand(const SuperPolynomial& x) {
    Vec v;
    for (const auto& [w, c] : x.terms())
      for (const auto& [mask, rf] : c.components()) v[{w, mask}] = rf;
    return v;
  }

  bool contains(const SuperPolynomial& x) const { return reduce(expand(x)).empty(); }
  std::size_t rank() const { return pivots_.size(); }
  const std::vector<OddMask>& masks() const { return masks_; }

 private:
  Vec reduce(Vec v) const {
    while (!v.empty()) {
      auto it = pivots_.find(v.begin()->first);
      if (it == pivots_.end()) break;
      const RationalFunction c = v.begin()->second;
      for (const auto& [k, x] : it->second) {
        RationalFunction& slot = v[k];
        slot = slot - c * x;
        if (slot.is_zero()) v.erase(k);
      }
    }
    return v;
  }

  void insert(Vec v) {
    v = reduce(std::move(v));
    if (v.empty()) return;
    const RationalFunction lead = v.begin()->second;
    for (auto& [k, x] : v) x = x / lead;
    const Coord key = v.begin()->first;
    pivots_.emplace(key, std::move(v));
  }

  std::size_t degree_;
  std::vector<OddMask> masks_;
  std::map<Coord, Vec> pivots_;
};

}  // namespace qsuper::testing
