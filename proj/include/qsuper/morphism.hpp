#pragma once

// Extensions of generator images to whole polynomials: homomorphisms,
// antihomomorphisms (plain or Koszul-signed), star and superstar maps.

#include <map>
#include <string>

#include "qsuper/grassmann.hpp"
#include "qsuper/superpoly.hpp"

namespace qsuper {

using Images = std::map<GenId, SuperPolynomial>;

/// Generators without an image map to themselves.
SuperPolynomial apply_hom(const SuperPolynomial& p, const Images& images);

enum class AntiSign { Plain, Koszul };
std::string anti_sign_name(AntiSign s);

/// S(c g1...gn) = c * s * S(gn)...S(g1) with s = 1 (Plain) or the Koszul sign
/// of reversing the word (Koszul).
SuperPolynomial apply_antihom(const SuperPolynomial& p, const Images& images, AntiSign sign);

/// Star: (c g1...gn)* = g_n*...g_1* conj(c), conjugate-linear and
/// antimultiplicative.
SuperPolynomial apply_star(const SuperPolynomial& p, const Images& images, const ConjugationSpec& conj);
/// Superstar: (c g1...gn)# = conj(c) g_1#...g_n#.
SuperPolynomial apply_superstar(const SuperPolynomial& p, const Images& images, const ConjugationSpec& conj);

/// Entrywise coefficient maps.
SuperPolynomial substitute_odd(const SuperPolynomial& p, const std::map<std::string, GrassmannScalar>& images);
SuperPolynomial substitute_even(const SuperPolynomial& p, const std::map<std::string, GrassmannScalar>& images);
/// Throws PoleAtLimit.
SuperPolynomial limit(const SuperPolynomial& p, const std::map<std::string, GaussRational>& point);

/// Images keyed by generator name, resolved to ids.
Images images_by_name(const std::map<std::string, SuperPolynomial>& named);

}  // namespace qsuper
