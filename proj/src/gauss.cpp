#include "qsuper/gauss.hpp"

#include "qsuper/errors.hpp"

namespace qsuper {

GaussRational GaussRational::inverse() const {
  if (is_zero()) throw Singular("division by zero in Q(i)");
  if (is_real()) return {Canonical{}, 1 / re_, 0};
  mpq_class norm = re_ * re_ + im_ * im_;
  return {Canonical{}, re_ / norm, -im_ / norm};
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

std::string GaussRational::str() const {
  if (is_real()) return re_.get_str();
  std::string imag;
  if (im_ == 1)
    imag = "i";
  else if (im_ == -1)
    imag = "-i";
  else
    imag = im_.get_str() + "*i";
  if (sgn(re_) == 0) return imag;
  std::string out = "(" + re_.get_str();
  if (sgn(im_) > 0) out += "+";
  out += imag + ")";
  return out;
}

}  // namespace qsuper
