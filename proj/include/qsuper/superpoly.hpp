#pragma once

// Elements of free super algebras: finite sums c * w of words w in graded
// generators with GrassmannScalar coefficients written to the left. Moving a
// coefficient to the right of a word of odd parity applies the twist.

#include <map>
#include <string>
#include <vector>

#include "qsuper/grassmann.hpp"
#include "qsuper/symbols.hpp"

namespace qsuper {

using Word = std::vector<GenId>;

int word_parity(const Word& w);
std::string word_str(const Word& w);

class SuperPolynomial {
 public:
  using TermMap = std::map<Word, GrassmannScalar>;

  SuperPolynomial() = default;
  SuperPolynomial(long c) : SuperPolynomial(GrassmannScalar(c)) {}  // NOLINT(google-explicit-constructor)
  SuperPolynomial(GrassmannScalar c);  // NOLINT(google-explicit-constructor)
  SuperPolynomial(const Word& w, GrassmannScalar c = 1);

  static SuperPolynomial generator(GenId g);
  static SuperPolynomial generator(std::string_view name);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_scalar() const;
  /// Coefficient of the empty word.
  GrassmannScalar constant() const;
  GrassmannScalar coefficient(const Word& w) const;
  std::size_t max_length() const;

  /// 0/1 for homogeneous elements (zero is even), -1 if mixed.
  int parity() const;

  void add_term(const Word& w, const GrassmannScalar& c);

  SuperPolynomial operator-() const;
  SuperPolynomial& operator+=(const SuperPolynomial& o);
  SuperPolynomial& operator-=(const SuperPolynomial& o);
  SuperPolynomial& operator*=(const SuperPolynomial& o) { return *this = *this * o; }
  friend SuperPolynomial operator+(SuperPolynomial a, const SuperPolynomial& b) { return a += b; }
  friend SuperPolynomial operator-(SuperPolynomial a, const SuperPolynomial& b) { return a -= b; }
  friend SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b);
  friend bool operator==(const SuperPolynomial& a, const SuperPolynomial& b) { return a.terms_ == b.terms_; }

  /// c * (*this)
  SuperPolynomial left_scaled(const GrassmannScalar& c) const;
  /// (*this) * c, with the twist applied across odd words.
  SuperPolynomial right_scaled(const GrassmannScalar& c) const;
  SuperPolynomial pow(int e) const;

  /// Apply a map to every coefficient.
  template <class F>
  SuperPolynomial map_coefficients(F&& f) const {
    SuperPolynomial r;
    for (const auto& [w, c] : terms_) r.add_term(w, f(c));
    return r;
  }

  /// Parseable text; terms ordered by length, then word.
  std::string str() const;

 private:
  TermMap terms_;
};

}  // namespace qsuper
