#include "qsuper/poly.hpp"

#include <algorithm>
#include <bit>

#include "qsuper/errors.hpp"

namespace qsuper {
namespace {

bool mono_greater(const Poly::Term& a, const Poly::Term& b) { return a.mono > b.mono; }

bool divides(const Monomial& d, const Monomial& m) {
  for (int i = 0; i < kMaxEvenParams; ++i)
    if (d[i] > m[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& m, const Monomial& d) {
  Monomial r{};
  for (int i = 0; i < kMaxEvenParams; ++i) r[i] = static_cast<std::int16_t>(m[i] - d[i]);
  return r;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r{};
  for (int i = 0; i < kMaxEvenParams; ++i) r[i] = static_cast<std::int16_t>(a[i] + b[i]);
  return r;
}

bool is_negative_display(const GaussRational& c) {
  return (c.is_real() && sgn(c.re()) < 0) || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
}

std::string mono_str(const Monomial& m) {
  std::string out;
  for (int i = 0; i < kMaxEvenParams; ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += even_param_name(i);
    if (m[i] != 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

// Univariate helpers: coefficient vectors, highest degree last.
using UPoly = std::vector<Poly>;

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

UPoly prem(UPoly r, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  const Poly& lcb = b.back();
  trim(r);
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t shift = r.size() - 1 - db;
    Poly lcr = r.back();
    for (auto& c : r) c = c * lcb;
    for (std::size_t k = 0; k < b.size(); ++k) r[k + shift] -= lcr * b[k];
    trim(r);
  }
  return r;
}

/// lc(b)^(deg a - deg b + 1) * a mod b, the multiplier fixed in advance.
UPoly exact_prem(UPoly r, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  const Poly& lcb = b.back();
  std::size_t steps = r.size() - b.size() + 1;
  trim(r);
  while (!r.empty() && r.size() - 1 >= db) {
    const std::size_t shift = r.size() - 1 - db;
    Poly lcr = r.back();
    for (auto& c : r) c = c * lcb;
    for (std::size_t k = 0; k < b.size(); ++k) r[k + shift] -= lcr * b[k];
    --steps;
    trim(r);
  }
  if (steps > 0) {
    const Poly f = lcb.pow(static_cast<int>(steps));
    for (auto& c : r) c = c * f;
  }
  return r;
}

Poly content(const UPoly& u) {
  Poly g;
  for (const auto& c : u) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

UPoly primitive(const UPoly& u, const Poly& cont) {
  UPoly out;
  out.reserve(u.size());
  for (const auto& c : u) {
    auto q = c.divide_exact(cont);
    if (!q) throw Error("internal: content does not divide coefficient");
    out.push_back(std::move(*q));
  }
  return out;
}

Poly exact_div_poly(const Poly& a, const Poly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw Error("internal: inexact division in remainder sequence");
  return std::move(*q);
}

/// Scales u so that the leading coefficient of its leading coefficient is 1.
/// Without this the rational coefficients of the remainder sequence grow
/// exponentially.
UPoly rescaled(UPoly u) {
  if (u.empty()) return u;
  const GaussRational inv = u.back().leading().coef.inverse();
  for (auto& c : u) c = c.scaled(inv);
  return u;
}

}  // namespace

int total_degree(const Monomial& m) {
  int d = 0;
  for (auto e : m) d += e;
  return d;
}

Poly::Poly(long c) : Poly(GaussRational(c)) {}

Poly::Poly(GaussRational c) {
  if (!c.is_zero()) terms_.push_back({unit_monomial(), std::move(c)});
}

Poly Poly::variable(int var, int exp) {
  Monomial m{};
  m.at(static_cast<std::size_t>(var)) = static_cast<std::int16_t>(exp);
  return monomial(m);
}

Poly Poly::monomial(const Monomial& m, GaussRational c) {
  Poly p;
  if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), mono_greater);
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coef += t.coef;
    else
      p.terms_.push_back(std::move(t));
    if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
  }
  // A zero sum followed by a duplicate of the same monomial is impossible
  // after sorting, so a single pass suffices.
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == unit_monomial());
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono == unit_monomial() && terms_[0].coef.is_one();
}

GaussRational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono == unit_monomial()) return terms_.back().coef;
  return GaussRational();
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.mono[static_cast<std::size_t>(var)]);
  return d;
}

std::uint32_t Poly::support() const {
  std::uint32_t s = 0;
  for (const auto& t : terms_)
    for (int i = 0; i < kMaxEvenParams; ++i)
      if (t.mono[static_cast<std::size_t>(i)] != 0) s |= 1u << i;
  return s;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin(), ae = terms_.end();
  auto b = o.terms_.begin(), be = o.terms_.end();
  while (a != ae || b != be) {
    if (b == be || (a != ae && a->mono > b->mono)) {
      out.push_back(std::move(*a++));
    } else if (a == ae || b->mono > a->mono) {
      out.push_back(*b++);
    } else {
      GaussRational c = a->coef + b->coef;
      if (!c.is_zero()) out.push_back({a->mono, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  if (a.is_single_term() || b.is_single_term()) {
    const Poly& s = a.is_single_term() ? a : b;
    const Poly& o = a.is_single_term() ? b : a;
    Poly r;
    r.terms_.reserve(o.terms_.size());
    // Multiplying by a monomial preserves the lex order.
    for (const auto& t : o.terms_)
      r.terms_.push_back({mono_mul(t.mono, s.terms_[0].mono), t.coef * s.terms_[0].coef});
    return r;
  }
  std::vector<Poly::Term> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) acc.push_back({mono_mul(x.mono, y.mono), x.coef * y.coef});
  return Poly::from_terms(std::move(acc));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coef == b.terms_[i].coef))
      return false;
  return true;
}

Poly Poly::scaled(const GaussRational& c) const {
  if (c.is_zero()) return Poly();
  Poly r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

Poly Poly::times_monomial(const Monomial& m) const {
  Poly r = *this;
  for (auto& t : r.terms_) t.mono = mono_mul(t.mono, m);
  return r;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw Error("negative power of a polynomial");
  Poly result(1), base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::conj_coefficients() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = t.coef.conj();
  return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw Singular("polynomial division by zero");
  if (is_zero()) return Poly();
  if (d.is_single_term()) {
    Poly q;
    q.terms_.reserve(terms_.size());
    GaussRational inv = d.terms_[0].coef.inverse();
    for (const auto& t : terms_) {
      if (!divides(d.terms_[0].mono, t.mono)) return std::nullopt;
      q.terms_.push_back({mono_div(t.mono, d.terms_[0].mono), t.coef * inv});
    }
    return q;
  }
  Poly r = *this;
  std::vector<Term> q;
  const Term& lead = d.terms_[0];
  GaussRational inv = lead.coef.inverse();
  while (!r.is_zero()) {
    const Term& lt = r.terms_[0];
    if (!divides(lead.mono, lt.mono)) return std::nullopt;
    Term qt{mono_div(lt.mono, lead.mono), lt.coef * inv};
    r -= d.times_monomial(qt.mono).scaled(qt.coef);
    q.push_back(std::move(qt));
  }
  return Poly::from_terms(std::move(q));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(terms_[0].coef.inverse());
}

std::vector<Poly> Poly::coefficients_in(int var) const {
  const auto v = static_cast<std::size_t>(var);
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(degree_in(var)) + 1);
  for (const auto& t : terms_) {
    Term s = t;
    s.mono[v] = 0;
    buckets[static_cast<std::size_t>(t.mono[v])].push_back(std::move(s));
  }
  std::vector<Poly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(Poly::from_terms(std::move(b)));
  return out;
}

Poly Poly::from_coefficients(int var, const std::vector<Poly>& coeffs) {
  std::vector<Term> acc;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    for (const auto& t : coeffs[k].terms_) {
      Term s = t;
      s.mono[static_cast<std::size_t>(var)] = static_cast<std::int16_t>(s.mono[static_cast<std::size_t>(var)] + k);
      acc.push_back(std::move(s));
    }
  return Poly::from_terms(std::move(acc));
}

Poly Poly::evaluate(const std::map<int, GaussRational>& point) const {
  std::vector<Term> acc;
  acc.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term s = t;
    for (const auto& [var, value] : point) {
      auto& e = s.mono[static_cast<std::size_t>(var)];
      for (int k = 0; k < e; ++k) s.coef *= value;
      e = 0;
    }
    acc.push_back(std::move(s));
  }
  return Poly::from_terms(std::move(acc));
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = is_negative_display(t.coef);
    GaussRational mag = neg ? -t.coef : t.coef;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    std::string m = mono_str(t.mono);
    if (m.empty())
      out += mag.str();
    else if (mag.is_one())
      out += m;
    else
      out += mag.str() + "*" + m;
  }
  return out;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (a == b) return a.monic();
  if (a.is_single_term() || b.is_single_term()) {
    const Poly& s = a.is_single_term() ? a : b;
    const Poly& o = a.is_single_term() ? b : a;
    Monomial m = s.leading().mono;
    for (const auto& t : o.terms())
      for (int i = 0; i < kMaxEvenParams; ++i)
        m[static_cast<std::size_t>(i)] = std::min(m[static_cast<std::size_t>(i)], t.mono[static_cast<std::size_t>(i)]);
    return Poly::monomial(m);
  }
  const std::uint32_t supp = a.support() | b.support();
  // main variable of lowest degree keeps the remainder sequence short
  int v = -1, best = 0;
  for (std::uint32_t s = supp; s; s &= s - 1) {
    const int k = std::countr_zero(s);
    const int d = std::max(a.degree_in(k), b.degree_in(k));
    if (v < 0 || d < best) v = k, best = d;
  }
  const bool in_a = a.degree_in(v) > 0;
  const bool in_b = b.degree_in(v) > 0;
  if (!in_a || !in_b) {
    const Poly& free_of_v = in_a ? b : a;
    const Poly& with_v = in_a ? a : b;
    Poly g = free_of_v;
    for (const auto& c : with_v.coefficients_in(v)) {
      g = gcd(g, c);
      if (g.is_one()) break;
    }
    return g.monic();
  }
  if (a.terms().size() <= b.terms().size()) {
    if (b.divide_exact(a)) return a.monic();
  } else if (a.divide_exact(b)) {
    return b.monic();
  }
  UPoly ua = a.coefficients_in(v), ub = b.coefficients_in(v);
  Poly ca = content(ua), cb = content(ub);
  Poly c = gcd(ca, cb);
  UPoly pa = rescaled(primitive(ua, ca)), pb = rescaled(primitive(ub, cb));
  if (pa.size() < pb.size()) std::swap(pa, pb);
  bool constant_coefficients = true;
  for (const auto* u : {&pa, &pb})
    for (const auto& x : *u) constant_coefficients = constant_coefficients && x.is_constant();
  if (constant_coefficients) {
    while (!pb.empty()) {
      UPoly r = prem(pa, pb);
      pa = std::move(pb);
      pb = rescaled(std::move(r));
    }
  } else {
    // subresultant remainder sequence; the divisions below are exact
    Poly sg(1), sh(1);
    while (!pb.empty()) {
      const std::size_t d = pa.size() - pb.size();
      UPoly r = exact_prem(pa, pb);
      pa = std::move(pb);
      pb.clear();
      if (r.empty()) break;
      const Poly div = sg * sh.pow(static_cast<int>(d));
      for (auto& x : r) x = exact_div_poly(x, div);
      pb = std::move(r);
      sg = pa.back();
      if (d > 0) sh = exact_div_poly(sg.pow(static_cast<int>(d)), sh.pow(static_cast<int>(d) - 1));
    }
  }
  Poly g = Poly::from_coefficients(v, primitive(pa, content(pa)));
  return (c * g).monic();
}

}  // namespace qsuper
