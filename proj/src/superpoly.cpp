#include "qsuper/superpoly.hpp"

#include <algorithm>

#include "qsuper/errors.hpp"

namespace qsuper {

int word_parity(const Word& w) {
  int p = 0;
  for (GenId g : w) p ^= as_int(generator_parity(g));
  return p;
}

std::string word_str(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += generator_name(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

SuperPolynomial::SuperPolynomial(GrassmannScalar c) {
  if (!c.is_zero()) terms_.emplace(Word{}, std::move(c));
}

SuperPolynomial::SuperPolynomial(const Word& w, GrassmannScalar c) {
  if (!c.is_zero()) terms_.emplace(w, std::move(c));
}

SuperPolynomial SuperPolynomial::generator(GenId g) { return SuperPolynomial(Word{g}); }

SuperPolynomial SuperPolynomial::generator(std::string_view name) {
  auto id = find_generator(name);
  if (!id) throw UnknownGenerator("unknown generator '" + std::string(name) + "'");
  return generator(*id);
}

bool SuperPolynomial::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

GrassmannScalar SuperPolynomial::constant() const { return coefficient(Word{}); }

GrassmannScalar SuperPolynomial::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? GrassmannScalar() : it->second;
}

std::size_t SuperPolynomial::max_length() const {
  std::size_t m = 0;
  for (const auto& [w, c] : terms_) m = std::max(m, w.size());
  return m;
}

int SuperPolynomial::parity() const {
  int p = -2;
  for (const auto& [w, c] : terms_) {
    const int cp = c.parity();
    if (cp < 0) return -1;
    const int tp = cp ^ word_parity(w);
    if (p == -2)
      p = tp;
    else if (p != tp)
      return -1;
  }
  return p == -2 ? 0 : p;
}

void SuperPolynomial::add_term(const Word& w, const GrassmannScalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SuperPolynomial SuperPolynomial::operator-() const {
  SuperPolynomial r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

SuperPolynomial& SuperPolynomial::operator+=(const SuperPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

SuperPolynomial& SuperPolynomial::operator-=(const SuperPolynomial& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

SuperPolynomial operator*(const SuperPolynomial& a, const SuperPolynomial& b) {
  SuperPolynomial r;
  for (const auto& [wa, ca] : a.terms_) {
    const bool odd = word_parity(wa) != 0;
    for (const auto& [wb, cb] : b.terms_) {
      Word w;
      w.reserve(wa.size() + wb.size());
      w.insert(w.end(), wa.begin(), wa.end());
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(w, ca * (odd ? cb.twist() : cb));
    }
  }
  return r;
}

SuperPolynomial SuperPolynomial::left_scaled(const GrassmannScalar& c) const {
  SuperPolynomial r;
  for (const auto& [w, x] : terms_) r.add_term(w, c * x);
  return r;
}

SuperPolynomial SuperPolynomial::right_scaled(const GrassmannScalar& c) const {
  SuperPolynomial r;
  const GrassmannScalar tc = c.twist();
  for (const auto& [w, x] : terms_) r.add_term(w, x * (word_parity(w) ? tc : c));
  return r;
}

SuperPolynomial SuperPolynomial::pow(int e) const {
  if (e < 0) throw Error("negative power of a noncommutative polynomial");
  SuperPolynomial r(1);
  for (int k = 0; k < e; ++k) r = r * *this;
  return r;
}

std::string SuperPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* x, auto* y) {
    if (x->first.size() != y->first.size()) return x->first.size() < y->first.size();
    return x->first < y->first;
  });
  std::string out;
  for (const auto* t : order) {
    const Word& w = t->first;
    const GrassmannScalar& c = t->second;
    std::string part;
    if (w.empty())
      part = c.is_compound() ? "(" + c.str() + ")" : c.str();
    else if (c.is_one())
      part = word_str(w);
    else if ((-c).is_one())
      part = "-" + word_str(w);
    else if (c.is_compound())
      part = "(" + c.str() + ")*" + word_str(w);
    else
      part = c.str() + "*" + word_str(w);
    if (out.empty())
      out = part;
    else if (part[0] == '-')
      out += " - " + part.substr(1);
    else
      out += " + " + part;
  }
  return out;
}

}  // namespace qsuper
