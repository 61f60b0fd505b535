#include "qsuper/morphism.hpp"

#include "qsuper/errors.hpp"

namespace qsuper {

namespace {

const SuperPolynomial& image_of(GenId g, const Images& images, SuperPolynomial& scratch) {
  auto it = images.find(g);
  if (it != images.end()) return it->second;
  scratch = SuperPolynomial::generator(g);
  return scratch;
}

int reversal_sign(const Word& w) {
  int odd_seen = 0, s = 0;
  for (GenId g : w) {
    if (generator_parity(g) == Parity::Odd) {
      s += odd_seen;
      ++odd_seen;
    }
  }
  return s & 1;
}

int even_index(const std::string& name) {
  auto info = find_param(name);
  if (!info || info->parity != Parity::Even) throw UnknownSymbol("unknown even parameter '" + name + "'");
  return info->index;
}

int odd_index(const std::string& name) {
  auto info = find_param(name);
  if (!info || info->parity != Parity::Odd) throw UnknownSymbol("unknown odd parameter '" + name + "'");
  return info->index;
}

}  // namespace

std::string anti_sign_name(AntiSign s) {
  return s == AntiSign::Plain ? "S(ab) = S(b)S(a)" : "S(ab) = (-1)^{t(a)t(b)} S(b)S(a)";
}

SuperPolynomial apply_hom(const SuperPolynomial& p, const Images& images) {
  SuperPolynomial out, scratch;
  for (const auto& [w, c] : p.terms()) {
    SuperPolynomial t(c);
    for (GenId g : w) t = t * image_of(g, images, scratch);
    out += t;
  }
  return out;
}

SuperPolynomial apply_antihom(const SuperPolynomial& p, const Images& images, AntiSign sign) {
  SuperPolynomial out, scratch;
  for (const auto& [w, c] : p.terms()) {
    SuperPolynomial t(c);
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = t * image_of(*it, images, scratch);
    out += (sign == AntiSign::Koszul && reversal_sign(w)) ? -t : t;
  }
  return out;
}

SuperPolynomial apply_star(const SuperPolynomial& p, const Images& images, const ConjugationSpec& conj) {
  SuperPolynomial out, scratch;
  for (const auto& [w, c] : p.terms()) {
    SuperPolynomial t(1);
    for (auto it = w.rbegin(); it != w.rend(); ++it) t = t * image_of(*it, images, scratch);
    out += t * SuperPolynomial(sconj(c, conj));
  }
  return out;
}

SuperPolynomial apply_superstar(const SuperPolynomial& p, const Images& images, const ConjugationSpec& conj) {
  SuperPolynomial out, scratch;
  for (const auto& [w, c] : p.terms()) {
    conj.require_images(c);
    SuperPolynomial t(c.conj_multiplicative(conj));
    for (GenId g : w) t = t * image_of(g, images, scratch);
    out += t;
  }
  return out;
}

SuperPolynomial substitute_odd(const SuperPolynomial& p, const std::map<std::string, GrassmannScalar>& images) {
  std::map<int, GrassmannScalar> idx;
  for (const auto& [name, img] : images) idx.emplace(odd_index(name), img);
  return p.map_coefficients([&](const GrassmannScalar& c) { return c.substitute_odd(idx); });
}

SuperPolynomial substitute_even(const SuperPolynomial& p, const std::map<std::string, GrassmannScalar>& images) {
  std::map<int, RationalFunction> idx;
  for (const auto& [name, img] : images) {
    if (!img.is_even_scalar()) throw SignatureError("image of even parameter '" + name + "' must be even");
    idx.emplace(even_index(name), img.body());
  }
  return p.map_coefficients([&](const GrassmannScalar& c) { return c.substitute_even(idx); });
}

SuperPolynomial limit(const SuperPolynomial& p, const std::map<std::string, GaussRational>& point) {
  return p.map_coefficients([&](const GrassmannScalar& c) { return slimit(c, point); });
}

Images images_by_name(const std::map<std::string, SuperPolynomial>& named) {
  Images out;
  for (const auto& [name, img] : named) {
    auto g = find_generator(name);
    if (!g) throw UnknownGenerator("unknown generator '" + name + "'");
    out.emplace(*g, img);
  }
  return out;
}

}  // namespace qsuper
