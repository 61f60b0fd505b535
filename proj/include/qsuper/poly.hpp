#pragma once

// Sparse multivariate polynomials over Q(i) in the even parameters, with exact
// division and a recursive primitive-PRS gcd. Terms are kept sorted in
// descending lexicographic order of exponent vectors (parameter 0 most
// significant), so the first term is the lex-leading term.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsuper/gauss.hpp"
#include "qsuper/symbols.hpp"

namespace qsuper {

using Monomial = std::array<std::int16_t, kMaxEvenParams>;

inline Monomial unit_monomial() { return Monomial{}; }
int total_degree(const Monomial& m);

class Poly {
 public:
  struct Term {
    Monomial mono;
    GaussRational coef;
  };

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(GaussRational c);  // NOLINT(google-explicit-constructor)
  static Poly variable(int var, int exp = 1);
  static Poly monomial(const Monomial& m, GaussRational c = 1);
  /// Builds from unsorted terms; merges duplicates and drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_single_term() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  GaussRational constant_term() const;

  int degree_in(int var) const;
  /// Variables with a positive exponent somewhere.
  std::uint32_t support() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

  Poly scaled(const GaussRational& c) const;
  Poly times_monomial(const Monomial& m) const;
  Poly pow(int e) const;
  Poly conj_coefficients() const;

  /// Quotient when `d` divides *this exactly, std::nullopt otherwise.
  std::optional<Poly> divide_exact(const Poly& d) const;
  /// Divide by the leading coefficient.
  Poly monic() const;

  /// Coefficients as a polynomial in `var`: result[k] multiplies var^k.
  std::vector<Poly> coefficients_in(int var) const;
  static Poly from_coefficients(int var, const std::vector<Poly>& coeffs);

  /// Substitute exact values for some variables.
  Poly evaluate(const std::map<int, GaussRational>& point) const;

  /// Parseable text using registered parameter names.
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

/// Monic greatest common divisor (gcd(0, 0) = 0).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace qsuper
