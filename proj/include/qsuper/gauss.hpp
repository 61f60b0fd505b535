#pragma once

#include <gmpxx.h>

#include <string>

namespace qsuper {

/// Exact element of Q(i): re + im*i with GMP rationals.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussRational imaginary_unit() { return GaussRational(0, 1); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return {Canonical{}, re_, -im_}; }
  GaussRational inverse() const;

  GaussRational operator-() const { return {Canonical{}, -re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o) { return *this *= o.inverse(); }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Parseable text: "3/2", "-i", "(1/2+3*i)".
  std::string str() const;
  /// True when str() needs parentheses to be a multiplicative factor.
  bool is_compound() const { return sgn(re_) != 0 && sgn(im_) != 0; }

 private:
  struct Canonical {};
  GaussRational(Canonical, mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  mpq_class re_{0};
  mpq_class im_{0};
};

}  // namespace qsuper
