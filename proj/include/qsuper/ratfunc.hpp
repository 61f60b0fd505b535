#pragma once

// Reduced fractions of polynomials in the even parameters. Laurent monomials
// such as q^-2 are represented with a monomial denominator.

#include <map>
#include <string>

#include "qsuper/poly.hpp"

namespace qsuper {

class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(GaussRational c) : num_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(Poly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  /// Reduces num/den to canonical form. Throws Singular for a zero denominator.
  RationalFunction(Poly num, Poly den);

  static RationalFunction param(int var, int exp = 1);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o) { return *this *= o.inverse(); }
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  /// Complex-conjugate the numeric coefficients.
  RationalFunction conj_coefficients() const;
  /// Replace parameters by rational functions (parameters absent from the map
  /// are kept).
  RationalFunction substitute(const std::map<int, RationalFunction>& images) const;
  /// Evaluate some parameters at exact values. Throws PoleAtLimit naming the
  /// denominator if it vanishes at the point.
  RationalFunction evaluate(const std::map<int, GaussRational>& point) const;

  std::string str() const;
  /// True when str() needs parentheses to be used as a factor.
  bool is_compound() const { return den_.is_one() && num_.terms().size() > 1; }

 private:
  void normalize();

  Poly num_;
  Poly den_{1};
};

}  // namespace qsuper
