#include "qsuper/liesuper.hpp"

#include "qsuper/errors.hpp"
#include "qsuper/fixtures.hpp"
#include "qsuper/morphism.hpp"
#include "qsuper/rmatrix.hpp"

namespace qsuper {

namespace {

constexpr const char* kLie = "Lie";
constexpr const char* kTarget = "Apq12";

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

GrassmannScalar inverse_factorial(int n) { return GrassmannScalar(GaussRational(mpq_class(1, factorial(n)))); }

/// sum_{n <= N} x^n / n!
SuperPolynomial exp_series(const SuperPolynomial& x, int order) {
  SuperPolynomial sum(1), term(1);
  for (int n = 1; n <= order; ++n) {
    term = term * x;
    sum += term.left_scaled(inverse_factorial(n));
  }
  return sum;
}

GrassmannScalar scalar_exp(const GrassmannScalar& x, int order) {
  GrassmannScalar sum(1), term(1);
  for (int n = 1; n <= order; ++n) {
    term = term * x;
    sum = sum + term * inverse_factorial(n);
  }
  return sum;
}

int hbar_degree(const Monomial& m, const std::vector<int>& vars) {
  int d = 0;
  for (int v : vars) d += m[v];
  return d;
}

/// Terms of total (u, hbar)-degree at most N.
SuperPolynomial low_degree_part(const SuperPolynomial& p, GenId u, const std::vector<int>& hbars, int order) {
  SuperPolynomial out;
  for (const auto& [w, c] : p.terms()) {
    int du = 0;
    for (GenId g : w) du += g == u;
    for (const auto& [mask, rf] : c.components()) {
      if (!rf.den().is_constant()) throw SignatureError("coefficient with a nonconstant denominator: " + rf.str());
      for (const auto& t : rf.num().terms()) {
        if (du + hbar_degree(t.mono, hbars) > order) continue;
        Poly mono = Poly::monomial(t.mono, t.coef);
        out.add_term(w, GrassmannScalar::odd_monomial(mask, RationalFunction(mono) / RationalFunction(rf.den())));
      }
    }
  }
  return out;
}

/// Multiplies p by the product of the distinct denominators of its coefficients.
SuperPolynomial clear_denominators(const SuperPolynomial& p) {
  std::vector<Poly> dens;
  for (const auto& [w, c] : p.terms())
    for (const auto& [mask, rf] : c.components()) {
      bool seen = false;
      for (const auto& d : dens) seen = seen || d == rf.den();
      if (!seen && !rf.den().is_constant()) dens.push_back(rf.den());
    }
  RationalFunction m(1);
  for (const auto& d : dens) m = m * RationalFunction(d);
  return p.left_scaled(GrassmannScalar(m));
}

}  // namespace

const Presentation& lie_presentation() { return preset(kLie); }

ExpCheck exp_relation_check(int order, const Presentation* relations) {
  if (order < 2) throw TruncationTooSmall("truncation order must be at least 2, got " + std::to_string(order));
  const Presentation& lie = lie_presentation();
  const Presentation& target = relations ? *relations : preset(kTarget);
  const GenId u = lie.gen("u");
  const SuperPolynomial U = SuperPolynomial::generator(u);
  Images images;
  images[target.gen("X")] = exp_series(U, order);
  images[target.gen("Theta1")] = exp_series(U, order) * SuperPolynomial::generator(lie.gen("xi1"));
  images[target.gen("Theta2")] =
      exp_series(U.left_scaled(GrassmannScalar(2)), order) * SuperPolynomial::generator(lie.gen("xi2"));
  const GrassmannScalar i = GrassmannScalar::imaginary_unit();
  const std::map<std::string, GrassmannScalar> params{
      {"q", scalar_exp(i * GrassmannScalar::even_param("hbar1"), order)},
      {"p", scalar_exp(i * GrassmannScalar::even_param("hbar2"), order)}};
  const std::vector<int> hbars{find_param("hbar1")->index, find_param("hbar2")->index};

  ExpCheck res;
  res.order = order;
  res.overall = Outcome::ok();
  for (const auto& rel : target.relations()) {
    const SuperPolynomial cleared = clear_denominators(substitute_even(rel.poly, params));
    const SuperPolynomial r = low_degree_part(lie.normal_form(apply_hom(cleared, images)), u, hbars, order);
    Outcome o = r.is_zero() ? Outcome::ok() : Outcome::fail("residual up to degree " + std::to_string(order) + ": " + r.str());
    if (!o.pass && res.overall.pass) res.overall = Outcome::fail(rel.label + ": " + o.witness);
    res.relations.push_back({rel.label, std::move(o)});
  }
  res.overall.note("truncated at total (u, hbar)-degree " + std::to_string(order));
  return res;
}

HopfVerdict primitive_hopf_check() { return hopf_check(costructure(kLie)); }

MatrixImages lie_matrix_images() {
  const Json& e = fixture_store().load("representations.json").at("lie_homomorphism");
  const Presentation& p = preset(e.at("presentation").get<std::string>());
  MatrixImages m;
  m.cite = e.value("cite", std::string());
  for (const auto& [g, rows] : e.at("images").items()) {
    const Parities flat(rows.size(), 0);
    m.images.emplace(p.gen(g), matrix_from_json(rows, flat, flat));
  }
  return m;
}

Outcome mu_check() {
  const Presentation& p = lie_presentation();
  const MatrixImages m = lie_matrix_images();
  for (GenId g : p.generators())
    if (!m.images.count(g)) throw MissingImage("no matrix for '" + generator_name(g) + "'");
  const std::size_t n = m.images.begin()->second.rows();
  const Parities flat(n, 0);
  Outcome out = Outcome::ok();
  for (const auto& rel : p.relations()) {
    ScalarMatrix sum(flat, flat);
    for (const auto& [w, c] : rel.poly.terms()) {
      ScalarMatrix prod = ScalarMatrix::identity(flat);
      for (GenId g : w) prod = prod * m.images.at(g);
      sum = sum + prod.scaled(c);
    }
    if (!sum.is_zero()) {
      out = Outcome::fail("'" + rel.label + "' maps to a matrix with " + matrix_witness(sum));
      break;
    }
  }
  out.note(std::to_string(p.relations().size()) + " brackets checked with free odd parameters");
  return out;
}

}  // namespace qsuper
