#include "qsuper/ratfunc.hpp"

#include "qsuper/errors.hpp"

namespace qsuper {
namespace {

Poly exact_div(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw Error("internal: inexact polynomial division");
  return std::move(*q);
}

bool needs_parens_as_den(const Poly& d) {
  if (!d.is_single_term()) return true;
  const auto& t = d.leading();
  if (!t.coef.is_one()) return true;
  int vars = 0;
  for (auto e : t.mono)
    if (e != 0) ++vars;
  return vars > 1;
}

}  // namespace

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Singular("zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  GaussRational lc = den_.leading().coef;
  if (!lc.is_one()) {
    GaussRational inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::param(int var, int exp) {
  if (exp >= 0) return RationalFunction(Poly::variable(var, exp));
  return RationalFunction(Poly(1), Poly::variable(var, -exp));
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    return *this;
  }
  Poly g = gcd(den_, o.den_);
  Poly da = exact_div(den_, g), db = exact_div(o.den_, g);
  num_ = num_ * db + o.num_ * da;
  den_ = da * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  Poly n = exact_div(num_, g1) * exact_div(o.num_, g2);
  Poly d = exact_div(den_, g2) * exact_div(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  GaussRational lc = den_.leading().coef;
  if (!lc.is_one()) {
    GaussRational inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw Singular("inverse of zero rational function");
  RationalFunction r;
  r.num_ = den_;
  r.den_ = num_;
  GaussRational lc = r.den_.leading().coef;
  if (!lc.is_one()) {
    GaussRational inv = lc.inverse();
    r.num_ = r.num_.scaled(inv);
    r.den_ = r.den_.scaled(inv);
  }
  return r;
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction r;
  r.num_ = num_.pow(e);
  r.den_ = den_.pow(e);
  return r;
}

RationalFunction RationalFunction::conj_coefficients() const {
  RationalFunction r;
  r.num_ = num_.conj_coefficients();
  r.den_ = den_.conj_coefficients();
  r.normalize();
  return r;
}

RationalFunction RationalFunction::substitute(const std::map<int, RationalFunction>& images) const {
  auto sub = [&](const Poly& p) {
    RationalFunction acc;
    for (const auto& t : p.terms()) {
      Monomial kept = t.mono;
      RationalFunction factor(Poly(t.coef));
      for (const auto& [var, img] : images) {
        auto& e = kept[static_cast<std::size_t>(var)];
        if (e != 0) factor *= img.pow(e);
        e = 0;
      }
      factor *= RationalFunction(Poly::monomial(kept));
      acc += factor;
    }
    return acc;
  };
  if (images.empty()) return *this;
  return sub(num_) / sub(den_);
}

RationalFunction RationalFunction::evaluate(const std::map<int, GaussRational>& point) const {
  Poly d = den_.evaluate(point);
  if (d.is_zero()) throw PoleAtLimit("denominator " + den_.str() + " vanishes at the limit point");
  return RationalFunction(num_.evaluate(point), std::move(d));
}

std::string RationalFunction::str() const {
  if (den_.is_one()) return num_.str();
  std::string n = num_.terms().size() > 1 ? "(" + num_.str() + ")" : num_.str();
  std::string d = needs_parens_as_den(den_) ? "(" + den_.str() + ")" : den_.str();
  return n + "/" + d;
}

}  // namespace qsuper
