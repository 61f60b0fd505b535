#pragma once

// Coefficient ring: rational functions in the even parameters tensored with
// the exterior algebra on the odd parameters. An odd monomial is a bit mask
// over odd parameter indices, read in ascending index order.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qsuper/ratfunc.hpp"
#include "qsuper/symbols.hpp"

namespace qsuper {

using OddMask = std::uint32_t;

/// Sign of the product m1*m2 of two ordered odd monomials (0 if they overlap).
int koszul_sign(OddMask left, OddMask right);

/// The declared parameters of a computation. Used to validate inputs; the
/// arithmetic itself works over the global symbol table.
struct ParamSignature {
  std::vector<std::string> even_params;
  std::vector<std::string> odd_params;
  bool has_imaginary_unit = true;

  /// Registers every name; throws SignatureError on duplicates or parity
  /// clashes.
  void validate() const;
};

class ConjugationSpec;

class GrassmannScalar {
 public:
  using Component = std::pair<OddMask, RationalFunction>;

  GrassmannScalar() = default;
  GrassmannScalar(long c) : GrassmannScalar(RationalFunction(c)) {}  // NOLINT(google-explicit-constructor)
  GrassmannScalar(GaussRational c) : GrassmannScalar(RationalFunction(std::move(c))) {}  // NOLINT
  GrassmannScalar(RationalFunction c);  // NOLINT(google-explicit-constructor)

  static GrassmannScalar even_param(std::string_view name, int exp = 1);
  static GrassmannScalar odd_param(std::string_view name);
  static GrassmannScalar odd_monomial(OddMask mask, RationalFunction coef = 1);
  static GrassmannScalar imaginary_unit();

  const std::vector<Component>& components() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  bool is_one() const;
  /// True when only the empty odd monomial occurs.
  bool is_even_scalar() const { return comps_.empty() || (comps_.size() == 1 && comps_[0].first == 0); }
  /// Coefficient of the empty odd monomial.
  RationalFunction body() const;
  RationalFunction coefficient(OddMask mask) const;
  OddMask odd_support() const;

  /// 0 or 1 for homogeneous scalars (zero counts as even), -1 if mixed.
  int parity() const;
  bool is_homogeneous() const { return parity() >= 0; }

  GrassmannScalar operator-() const;
  GrassmannScalar& operator+=(const GrassmannScalar& o);
  GrassmannScalar& operator-=(const GrassmannScalar& o);
  GrassmannScalar& operator*=(const GrassmannScalar& o) { return *this = *this * o; }
  friend GrassmannScalar operator+(GrassmannScalar a, const GrassmannScalar& b) { return a += b; }
  friend GrassmannScalar operator-(GrassmannScalar a, const GrassmannScalar& b) { return a -= b; }
  friend GrassmannScalar operator*(const GrassmannScalar& a, const GrassmannScalar& b);
  friend bool operator==(const GrassmannScalar& a, const GrassmannScalar& b);

  GrassmannScalar scaled(const RationalFunction& c) const;
  /// Parity automorphism: negates components with an odd number of odd
  /// parameters. For an odd generator x, x*c == twist(c)*x.
  GrassmannScalar twist() const;
  /// Inverse when the body is nonzero; throws Singular otherwise.
  GrassmannScalar inverse() const;
  GrassmannScalar pow(int e) const;

  /// Keep only components whose odd monomial does not contain all of `mask`.
  GrassmannScalar drop_containing(OddMask mask) const;
  /// Replace odd parameters by scalars (order-preserving product).
  GrassmannScalar substitute_odd(const std::map<int, GrassmannScalar>& images) const;
  /// Replace even parameters by rational functions.
  GrassmannScalar substitute_even(const std::map<int, RationalFunction>& images) const;
  /// Evaluate even parameters; throws PoleAtLimit if a reduced denominator
  /// vanishes.
  GrassmannScalar limit(const std::map<int, GaussRational>& point) const;
  /// Star conjugation: conjugate-linear antihomomorphism.
  GrassmannScalar conj(const ConjugationSpec& c) const;
  /// Superstar conjugation: conjugate-linear homomorphism.
  GrassmannScalar conj_multiplicative(const ConjugationSpec& c) const;

  std::string str() const;
  /// True when str() needs parentheses to be used as a factor.
  bool is_compound() const;

 private:
  std::vector<Component> comps_;  // sorted by mask, no zero coefficients
};

GrassmannScalar smul(const GrassmannScalar& a, const GrassmannScalar& b);
GrassmannScalar sconj(const GrassmannScalar& a, const ConjugationSpec& c);
GrassmannScalar slimit(const GrassmannScalar& a, const std::map<std::string, GaussRational>& point);

class ConjugationSpec {
 public:
  struct OddImage {
    int sign;
    int index;
  };

  ConjugationSpec() = default;
  /// Images by name: even images are rational-function expressions, odd
  /// images are "[-]name". Verifies involutivity on every listed symbol.
  ConjugationSpec(const std::map<std::string, std::string>& even_images,
                  const std::map<std::string, std::string>& odd_images,
                  bool conjugates_imaginary_unit = true);

  const std::map<int, RationalFunction>& even_images() const { return even_; }
  const std::map<int, OddImage>& odd_images() const { return odd_; }
  bool conjugates_imaginary_unit() const { return conj_i_; }

  /// Throws MissingImage when a parameter occurring in `a` has no image.
  void require_images(const GrassmannScalar& a) const;

 private:
  std::map<int, RationalFunction> even_;
  std::map<int, OddImage> odd_;
  bool conj_i_ = true;
};

}  // namespace qsuper
