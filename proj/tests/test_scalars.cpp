#include "doctest.h"

#include "qsuper/errors.hpp"
#include "qsuper/fixtures.hpp"
#include "qsuper/grassmann.hpp"
#include "qsuper/hopfstar.hpp"
#include "qsuper/parse.hpp"
#include "support.hpp"

using namespace qsuper;

namespace {

GrassmannScalar S(const char* text) { return parse_scalar(text); }

const std::map<std::string, GaussRational> kOne = {{"q", GaussRational(1)}, {"p", GaussRational(1)}};

}  // namespace

TEST_CASE("odd parameters anticommute and square to zero") {
  CHECK(smul(S("h"), S("h'")) == S("h*h'"));
  CHECK(smul(S("h'"), S("h")) == -S("h*h'"));
  CHECK(smul(S("h"), S("h")).is_zero());
  CHECK((S("h*h'") + S("h'*h")).is_zero());
  CHECK(smul(S("(q-1)^-1"), S("q-1")) == S("1"));
}

TEST_CASE("parsing and printing") {
  CHECK(S("(q^2-1)/(q-1)").str() == "q + 1");
  CHECK(S("q^-2*p + h*h'/(q-1)").str() == "p/q^2 + 1/(q - 1)*h*h'");
  CHECK(S("i*i") == S("-1"));
  CHECK_THROWS_AS(S("h/h'"), Error);
  CHECK_THROWS_AS(S("q +"), ParseError);
}

TEST_CASE("print and parse round trip") {
  testing::RandomScalars gen(11, {"q", "p", "hbar1"}, {"h", "h'", "eps1"});
  for (int n = 0; n < 300; ++n) {
    const GrassmannScalar a = gen.scalar() + gen.scalar() * GrassmannScalar::imaginary_unit();
    CHECK_MESSAGE(parse_scalar(a.str()) == a, a.str());
  }
}

TEST_CASE("slimit") {
  CHECK(slimit(S("h/(q-1)") * S("q-1"), kOne) == S("h"));
  CHECK(slimit(S("(q^2-1)/(q-1)"), kOne) == S("2"));
  CHECK_THROWS_AS(slimit(S("1/(q-1)"), kOne), PoleAtLimit);
  CHECK_THROWS_AS(slimit(S("h*h'/(q*p-1)"), kOne), PoleAtLimit);
  CHECK(slimit(S("(q*p-1)/(q-1) * h"), {{"q", GaussRational(2)}, {"p", GaussRational(1)}}) == S("h"));
}

TEST_CASE("ring laws on random scalars") {
  testing::RandomScalars gen(20240611, {"q", "p"}, {"h", "h'", "eps1", "eps2"});
  for (int n = 0; n < 1000; ++n) {
    const GrassmannScalar a = gen.scalar(), b = gen.scalar(), c = gen.scalar();
    REQUIRE(smul(smul(a, b), c) == smul(a, smul(b, c)));
    REQUIRE(smul(a, b + c) == smul(a, b) + smul(a, c));
    REQUIRE(smul(a + b, c) == smul(a, c) + smul(b, c));
  }
}

TEST_CASE("graded commutativity of odd monomials") {
  testing::RandomScalars gen(7, {"q", "p"}, {"h", "h'", "eps1", "eps2"});
  for (int n = 0; n < 1000; ++n) {
    const int da = gen.pick(0, 2), db = gen.pick(0, 2);
    const GrassmannScalar a = gen.odd_monomial_scalar(da), b = gen.odd_monomial_scalar(db);
    const GrassmannScalar ba = smul(b, a);
    REQUIRE(smul(a, b) == ((da * db) % 2 ? -ba : ba));
  }
}

TEST_CASE("slimit is additive and multiplicative away from poles") {
  testing::RandomScalars gen(99, {"q", "p"}, {"h", "h'"});
  int checked = 0;
  for (int n = 0; n < 1000; ++n) {
    const GrassmannScalar a = gen.scalar(), b = gen.scalar();
    try {
      const GrassmannScalar la = slimit(a, kOne), lb = slimit(b, kOne);
      REQUIRE(slimit(a + b, kOne) == la + lb);
      REQUIRE(slimit(a * b, kOne) == la * lb);
      ++checked;
    } catch (const PoleAtLimit&) {
    }
  }
  CHECK(checked > 500);
}

TEST_CASE("conjugation") {
  register_conjugate_symbols();
  const ConjugationSpec c({{"q", "q^-1"}}, {{"h", "-h"}, {"h'", "h'"}});
  CHECK(sconj(S("q"), c) == S("q^-1"));
  CHECK(sconj(S("h"), c) == S("-h"));
  CHECK(sconj(S("h*h'"), c) == S("h*h'"));
  CHECK(sconj(S("i*q"), c) == S("-i/q"));
  CHECK_THROWS_AS(sconj(S("p"), c), MissingImage);
  CHECK_THROWS_AS(ConjugationSpec({{"q", "q^2"}}, {}), Error);
}

TEST_CASE("every fixture conjugation is involutive on random scalars") {
  register_conjugate_symbols();
  std::vector<ConjugationSpec> specs;
  for (const auto& n : involution_names()) specs.push_back(involution(n).conj);
  specs.emplace_back(std::map<std::string, std::string>{{"q", "q^-1"}, {"p", "p^-1"}},
                     std::map<std::string, std::string>{{"h", "hb"}, {"hb", "h"}, {"h'", "hb'"}, {"hb'", "h'"}});
  int n = 0;
  for (const auto& c : specs) {
    std::vector<std::string> even, odd;
    for (const auto& [k, v] : c.even_images()) even.push_back(even_param_name(k));
    for (const auto& [k, v] : c.odd_images()) odd.push_back(odd_param_name(k));
    testing::RandomScalars gen(1234 + n, even, odd);
    for (int k = 0; k < 250; ++k, ++n) {
      const GrassmannScalar a = gen.scalar() + gen.scalar() * GrassmannScalar::imaginary_unit();
      REQUIRE(sconj(sconj(a, c), c) == a);
      const GrassmannScalar b = gen.scalar();
      // antimultiplicative on the Grassmann part
      REQUIRE(sconj(smul(a, b), c) == smul(sconj(b, c), sconj(a, c)));
    }
  }
  CHECK(n >= 1000);
}

TEST_CASE("polynomial gcd on random products") {
  testing::RandomScalars gen(31, {"q", "p"}, {});
  const auto poly = [&] {
    Poly x = (gen.scalar() + gen.scalar() * GrassmannScalar::even_param("q", 3)).body().num();
    return x.is_zero() ? Poly(1) : x;
  };
  for (int n = 0; n < 200; ++n) {
    const Poly a = poly(), b = poly(), c = poly();
    const Poly g = gcd(a * c, b * c);
    REQUIRE(g.divide_exact(c.monic()).has_value());
    REQUIRE((a * c).divide_exact(g).has_value());
    REQUIRE((b * c).divide_exact(g).has_value());
    // the cofactors are coprime
    const Poly u = *(a * c).divide_exact(g), v = *(b * c).divide_exact(g);
    REQUIRE(gcd(u, v).is_one());
  }
}
