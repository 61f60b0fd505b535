#include "qsuper/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "qsuper/errors.hpp"
#include "qsuper/parse.hpp"

namespace qsuper {
namespace {

std::string odd_monomial_str(OddMask m) {
  std::string out;
  for (int i = 0; m != 0; ++i, m >>= 1) {
    if (!(m & 1u)) continue;
    if (!out.empty()) out += "*";
    out += odd_param_name(i);
  }
  return out;
}

std::vector<GrassmannScalar::Component> from_map(std::map<OddMask, RationalFunction>&& m) {
  std::vector<GrassmannScalar::Component> out;
  out.reserve(m.size());
  for (auto& [mask, rf] : m)
    if (!rf.is_zero()) out.emplace_back(mask, std::move(rf));
  return out;
}

}  // namespace

int koszul_sign(OddMask left, OddMask right) {
  if (left & right) return 0;
  int swaps = 0;
  for (OddMask r = right; r != 0; r &= r - 1) {
    const int b = std::countr_zero(r);
    const OddMask above = b >= 31 ? 0u : ~((OddMask{2} << b) - 1);
    swaps += std::popcount(left & above);
  }
  return (swaps & 1) ? -1 : 1;
}

void ParamSignature::validate() const {
  std::set<std::string> seen;
  for (const auto& n : even_params) {
    if (!seen.insert(n).second) throw SignatureError("duplicate parameter '" + n + "'");
    register_param(n, Parity::Even);
  }
  for (const auto& n : odd_params) {
    if (!seen.insert(n).second) throw SignatureError("duplicate parameter '" + n + "'");
    register_param(n, Parity::Odd);
  }
}

GrassmannScalar::GrassmannScalar(RationalFunction c) {
  if (!c.is_zero()) comps_.emplace_back(0, std::move(c));
}

GrassmannScalar GrassmannScalar::even_param(std::string_view name, int exp) {
  return GrassmannScalar(RationalFunction::param(register_param(name, Parity::Even), exp));
}

GrassmannScalar GrassmannScalar::odd_param(std::string_view name) {
  return odd_monomial(OddMask{1} << register_param(name, Parity::Odd));
}

GrassmannScalar GrassmannScalar::odd_monomial(OddMask mask, RationalFunction coef) {
  GrassmannScalar s;
  if (!coef.is_zero()) s.comps_.emplace_back(mask, std::move(coef));
  return s;
}

GrassmannScalar GrassmannScalar::imaginary_unit() { return GrassmannScalar(GaussRational::imaginary_unit()); }

bool GrassmannScalar::is_one() const {
  return comps_.size() == 1 && comps_[0].first == 0 && comps_[0].second.is_one();
}

RationalFunction GrassmannScalar::body() const { return coefficient(0); }

RationalFunction GrassmannScalar::coefficient(OddMask mask) const {
  auto it = std::lower_bound(comps_.begin(), comps_.end(), mask,
                             [](const Component& c, OddMask m) { return c.first < m; });
  if (it != comps_.end() && it->first == mask) return it->second;
  return RationalFunction();
}

OddMask GrassmannScalar::odd_support() const {
  OddMask s = 0;
  for (const auto& c : comps_) s |= c.first;
  return s;
}

int GrassmannScalar::parity() const {
  int p = -2;
  for (const auto& c : comps_) {
    const int cp = std::popcount(c.first) & 1;
    if (p == -2)
      p = cp;
    else if (p != cp)
      return -1;
  }
  return p == -2 ? 0 : p;
}

GrassmannScalar GrassmannScalar::operator-() const {
  GrassmannScalar r = *this;
  for (auto& c : r.comps_) c.second = -c.second;
  return r;
}

GrassmannScalar& GrassmannScalar::operator+=(const GrassmannScalar& o) {
  if (o.comps_.empty()) return *this;
  if (comps_.empty()) return *this = o;
  std::vector<Component> out;
  out.reserve(comps_.size() + o.comps_.size());
  auto a = comps_.begin(), ae = comps_.end();
  auto b = o.comps_.begin(), be = o.comps_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == ae || b->first < a->first) {
      out.push_back(*b++);
    } else {
      RationalFunction s = a->second + b->second;
      if (!s.is_zero()) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  comps_ = std::move(out);
  return *this;
}

GrassmannScalar& GrassmannScalar::operator-=(const GrassmannScalar& o) { return *this += -o; }

GrassmannScalar operator*(const GrassmannScalar& a, const GrassmannScalar& b) {
  if (a.comps_.empty() || b.comps_.empty()) return GrassmannScalar();
  if (a.is_even_scalar() && a.comps_[0].second.is_one()) return b;
  if (b.is_even_scalar() && b.comps_[0].second.is_one()) return a;
  std::map<OddMask, RationalFunction> acc;
  for (const auto& [ma, ca] : a.comps_)
    for (const auto& [mb, cb] : b.comps_) {
      const int s = koszul_sign(ma, mb);
      if (s == 0) continue;
      RationalFunction prod = ca * cb;
      if (s < 0) prod = -prod;
      auto [it, fresh] = acc.try_emplace(ma | mb, std::move(prod));
      if (!fresh) it->second += prod;
    }
  GrassmannScalar r;
  r.comps_ = from_map(std::move(acc));
  return r;
}

bool operator==(const GrassmannScalar& a, const GrassmannScalar& b) {
  if (a.comps_.size() != b.comps_.size()) return false;
  for (std::size_t i = 0; i < a.comps_.size(); ++i)
    if (a.comps_[i].first != b.comps_[i].first || !(a.comps_[i].second == b.comps_[i].second))
      return false;
  return true;
}

GrassmannScalar GrassmannScalar::scaled(const RationalFunction& c) const {
  if (c.is_zero()) return GrassmannScalar();
  GrassmannScalar r = *this;
  for (auto& comp : r.comps_) comp.second *= c;
  return r;
}

GrassmannScalar GrassmannScalar::twist() const {
  GrassmannScalar r = *this;
  for (auto& c : r.comps_)
    if (std::popcount(c.first) & 1) c.second = -c.second;
  return r;
}

GrassmannScalar GrassmannScalar::inverse() const {
  RationalFunction b = body();
  if (b.is_zero()) throw Singular("scalar with vanishing body is not invertible: " + str());
  RationalFunction binv = b.inverse();
  GrassmannScalar m = (*this - GrassmannScalar(b)).scaled(-binv);  // nilpotent part
  GrassmannScalar sum(1), term(1);
  while (true) {
    term = term * m;
    if (term.is_zero()) break;
    sum += term;
  }
  return sum.scaled(binv);
}

GrassmannScalar GrassmannScalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  GrassmannScalar r(1);
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

GrassmannScalar GrassmannScalar::drop_containing(OddMask mask) const {
  GrassmannScalar r;
  for (const auto& c : comps_)
    if ((c.first & mask) != mask) r.comps_.push_back(c);
  return r;
}

GrassmannScalar GrassmannScalar::substitute_odd(const std::map<int, GrassmannScalar>& images) const {
  GrassmannScalar r;
  for (const auto& [mask, rf] : comps_) {
    GrassmannScalar term(rf);
    for (int i = 0; (mask >> i) != 0; ++i) {
      if (!((mask >> i) & 1u)) continue;
      auto it = images.find(i);
      term = term * (it != images.end() ? it->second : odd_monomial(OddMask{1} << i));
    }
    r += term;
  }
  return r;
}

GrassmannScalar GrassmannScalar::substitute_even(const std::map<int, RationalFunction>& images) const {
  GrassmannScalar r;
  for (const auto& [mask, rf] : comps_) r += odd_monomial(mask, rf.substitute(images));
  return r;
}

GrassmannScalar GrassmannScalar::limit(const std::map<int, GaussRational>& point) const {
  GrassmannScalar r;
  for (const auto& [mask, rf] : comps_) {
    try {
      r += odd_monomial(mask, rf.evaluate(point));
    } catch (const PoleAtLimit& e) {
      const std::string where = mask == 0 ? "body" : "component " + odd_monomial_str(mask);
      throw PoleAtLimit(std::string(e.what()) + " (" + where + " of " + str() + ")");
    }
  }
  return r;
}

namespace {

GrassmannScalar conj_impl(const GrassmannScalar& a, const ConjugationSpec& c, bool reverse) {
  c.require_images(a);
  GrassmannScalar r;
  for (const auto& [mask, rf] : a.components()) {
    RationalFunction coef = c.conjugates_imaginary_unit() ? rf.conj_coefficients() : rf;
    coef = coef.substitute(c.even_images());
    std::vector<int> idx;
    for (int i = 0; (mask >> i) != 0; ++i)
      if ((mask >> i) & 1u) idx.push_back(i);
    if (reverse) std::reverse(idx.begin(), idx.end());
    GrassmannScalar term(coef);
    for (int i : idx) {
      const auto& img = c.odd_images().at(i);
      GrassmannScalar f = GrassmannScalar::odd_monomial(OddMask{1} << img.index);
      term = term * (img.sign < 0 ? -f : f);
    }
    r += term;
  }
  return r;
}

}  // namespace

GrassmannScalar GrassmannScalar::conj(const ConjugationSpec& c) const { return conj_impl(*this, c, true); }

GrassmannScalar GrassmannScalar::conj_multiplicative(const ConjugationSpec& c) const {
  return conj_impl(*this, c, false);
}

std::string GrassmannScalar::str() const {
  if (comps_.empty()) return "0";
  std::string out;
  for (const auto& [mask, rf] : comps_) {
    std::string part;
    if (mask == 0) {
      part = rf.str();
    } else {
      const std::string odd = odd_monomial_str(mask);
      if (rf.is_one())
        part = odd;
      else if ((-rf).is_one())
        part = "-" + odd;
      else if (rf.is_compound())
        part = "(" + rf.str() + ")*" + odd;
      else
        part = rf.str() + "*" + odd;
    }
    if (out.empty())
      out = part;
    else if (part[0] == '-')
      out += " - " + part.substr(1);
    else
      out += " + " + part;
  }
  return out;
}

bool GrassmannScalar::is_compound() const {
  if (comps_.size() > 1) return true;
  return comps_.size() == 1 && comps_[0].first == 0 && comps_[0].second.is_compound();
}

GrassmannScalar smul(const GrassmannScalar& a, const GrassmannScalar& b) { return a * b; }

GrassmannScalar sconj(const GrassmannScalar& a, const ConjugationSpec& c) { return a.conj(c); }

GrassmannScalar slimit(const GrassmannScalar& a, const std::map<std::string, GaussRational>& point) {
  std::map<int, GaussRational> idx;
  for (const auto& [name, value] : point) {
    auto info = find_param(name);
    if (!info || info->parity != Parity::Even)
      throw UnknownSymbol("limit point names unknown even parameter '" + name + "'");
    idx.emplace(info->index, value);
  }
  return a.limit(idx);
}

ConjugationSpec::ConjugationSpec(const std::map<std::string, std::string>& even_images,
                                 const std::map<std::string, std::string>& odd_images,
                                 bool conjugates_imaginary_unit)
    : conj_i_(conjugates_imaginary_unit) {
  for (const auto& [name, expr] : even_images) {
    const int idx = register_param(name, Parity::Even);
    GrassmannScalar img = parse_scalar(expr);
    if (!img.is_even_scalar()) throw SignatureError("even parameter '" + name + "' needs an even image");
    even_.emplace(idx, img.body());
  }
  for (const auto& [name, expr] : odd_images) {
    const int idx = register_param(name, Parity::Odd);
    std::string_view target = expr;
    int sign = 1;
    if (!target.empty() && target[0] == '-') {
      sign = -1;
      target.remove_prefix(1);
    }
    auto info = find_param(target);
    if (!info || info->parity != Parity::Odd)
      throw SignatureError("odd parameter '" + name + "' needs a signed odd parameter image");
    odd_.emplace(idx, OddImage{sign, info->index});
  }
  for (const auto& [idx, img] : even_) {
    RationalFunction back = (conj_i_ ? img.conj_coefficients() : img).substitute(even_);
    if (!(back == RationalFunction::param(idx)))
      throw NotInvolutive("conjugation of '" + even_param_name(idx) + "' is not an involution");
  }
  for (const auto& [idx, img] : odd_) {
    auto it = odd_.find(img.index);
    if (it == odd_.end() || it->second.index != idx || img.sign * it->second.sign != 1)
      throw NotInvolutive("conjugation of '" + odd_param_name(idx) + "' is not an involution");
  }
}

void ConjugationSpec::require_images(const GrassmannScalar& a) const {
  for (const auto& [mask, rf] : a.components()) {
    for (int i = 0; (mask >> i) != 0; ++i)
      if (((mask >> i) & 1u) && !odd_.count(i))
        throw MissingImage("no conjugation rule for '" + odd_param_name(i) + "'");
    const std::uint32_t supp = rf.num().support() | rf.den().support();
    for (int i = 0; i < kMaxEvenParams; ++i)
      if (((supp >> i) & 1u) && !even_.count(i))
        throw MissingImage("no conjugation rule for '" + even_param_name(i) + "'");
  }
}

}  // namespace qsuper
