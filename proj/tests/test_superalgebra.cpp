#include "doctest.h"

#include "qsuper/errors.hpp"
#include "qsuper/fixtures.hpp"
#include "qsuper/parse.hpp"
#include "qsuper/presentation.hpp"
#include "support.hpp"

using namespace qsuper;

namespace {

void check_nf(const Presentation& p, const char* in, const char* out) {
  CHECK_MESSAGE(p.normal_form(p.parse(in)) == p.parse(out), p.name() << ": " << in);
}

/// Degree-4 ideal membership and irreducibility of normal forms against a
/// model that only uses linear algebra.
void oracle(const std::string& name, std::size_t degree) {
  const Presentation& p = preset(name);
  const testing::TruncatedIdeal ideal(p, degree);
  std::size_t total = 0, irreducible = 0;
  for (const auto& w : testing::all_words(p.generators(), degree)) {
    ++total;
    if (p.is_irreducible(w)) ++irreducible;
    const SuperPolynomial nf = p.normal_form(SuperPolynomial(w));
    REQUIRE_MESSAGE(ideal.contains(SuperPolynomial(w) - nf), name << " " << word_str(w));
    for (const auto& [x, c] : nf.terms()) REQUIRE_MESSAGE(p.is_irreducible(x), name << " " << word_str(x));
  }
  // reducible words span the truncated ideal, one copy per odd monomial
  CHECK(ideal.rank() == (total - irreducible) * ideal.masks().size());
}

}  // namespace

TEST_CASE("normal forms") {
  const Presentation& aq = preset("Aq12");
  check_nf(aq, "X*Theta1", "q*Theta1*X");
  check_nf(aq, "X*Theta2*Theta1", "-q^3*Theta1*Theta2*X");
  check_nf(aq, "Theta1*X*Theta1", "0");
  check_nf(aq, "X^2*Theta2", "q^2*Theta2*X^2");

  const Presentation& ah = preset("Ah12");
  check_nf(ah, "x*theta2", "theta2*x + h*x^2");
  check_nf(ah, "theta2*theta2", "-h*theta2*x");
  check_nf(ah, "theta2*theta1", "-theta1*theta2");
  check_nf(ah, "h*theta2*theta2", "0");
  check_nf(ah, "x*theta2*x", "theta2*x^2 + h*x^3");
}

TEST_CASE("parameters commute past generators with the twist") {
  const Presentation& aq = preset("Aq12");
  const SuperPolynomial t = aq.parse("Theta1");
  const GrassmannScalar h = GrassmannScalar::odd_param("h");
  CHECK(t.right_scaled(h) == t.left_scaled(-h));
  CHECK(aq.parse("X").right_scaled(h) == aq.parse("X").left_scaled(h));
}

TEST_CASE("every preset is locally confluent") {
  for (const auto& n : preset_names()) {
    const ConfluenceReport r = check_local_confluence(preset(n));
    CHECK_MESSAGE(r.confluent, n << ": " << r.str());
    CHECK(r.pairs_checked > 0);
  }
}

TEST_CASE("a non-confluent rule set is detected") {
  const std::vector<GeneratorSpec> gens = {{"cx", Parity::Even}, {"cy", Parity::Even}};
  const GenId x = register_generator("cx", Parity::Even), y = register_generator("cy", Parity::Even);
  const Presentation p = Presentation::from_rules(
      "bad", gens, {{Word{x, y}, SuperPolynomial(1), "xy"}, {Word{y, x}, SuperPolynomial::generator(x), "yx"}});
  const ConfluenceReport r = check_local_confluence(p);
  REQUIRE_FALSE(r.confluent);
  REQUIRE(r.failure.has_value());
  CHECK(r.failure->reduced_a != r.failure->reduced_b);
}

TEST_CASE("rules that do not decrease the word are rejected") {
  const std::vector<GeneratorSpec> gens = {{"cx", Parity::Even}, {"cy", Parity::Even}};
  const GenId x = register_generator("cx", Parity::Even);
  CHECK_THROWS_AS(Presentation::from_rules("loop", gens, {{Word{x}, SuperPolynomial(Word{x, x}), ""}}), TerminationError);
}

TEST_CASE("normal form is idempotent and multiplicative on random words") {
  std::mt19937_64 rng(5);
  for (const auto& n : preset_names()) {
    const Presentation& p = preset(n);
    for (int k = 0; k < 60; ++k) {
      const SuperPolynomial u(testing::random_word(rng, p.generators(), 4));
      const SuperPolynomial v(testing::random_word(rng, p.generators(), 3));
      const SuperPolynomial nu = p.normal_form(u);
      REQUIRE(p.normal_form(nu) == nu);
      REQUIRE(p.normal_form(u * v) == p.normal_form(nu * p.normal_form(v)));
      REQUIRE(p.normal_form(u + v) == nu + p.normal_form(v));
    }
  }
}

TEST_CASE("ideal oracle at degree 4") {
  for (const auto& n : preset_names()) {
    if (n == "Mhh12") continue;
    SUBCASE(n.c_str()) { oracle(n, 4); }
  }
}

TEST_CASE("ideal oracle at degree 3 for Mhh12") { oracle("Mhh12", 3); }

TEST_CASE("ideal oracle at degree 4 for Mhh12 [slow]") { oracle("Mhh12", 4); }

TEST_CASE("graded tensor square signs") {
  const Presentation& aq = preset("Aq12");
  const Presentation sq = tensor_square(aq);
  const GenId t = aq.gen("Theta1"), x = aq.gen("X");
  const auto w = [](GenId a, int i, GenId b, int j) { return SuperPolynomial(Word{tensor_generator(a, i), tensor_generator(b, j)}); };
  CHECK(sq.normal_form(w(t, 2, t, 1)) == -w(t, 1, t, 2));
  CHECK(sq.normal_form(w(x, 2, t, 1)) == w(t, 1, x, 2));
  CHECK(sq.normal_form(w(t, 2, x, 1)) == w(x, 1, t, 2));
  CHECK(check_local_confluence(sq).confluent);
  CHECK(sq.generators().size() == 6);
}

TEST_CASE("irreducible words of Ah12 are ordered monomials") {
  const Presentation& ah = preset("Ah12");
  const GenId t1 = ah.gen("theta1"), t2 = ah.gen("theta2"), x = ah.gen("x");
  std::map<std::size_t, std::size_t> per_degree;
  for (const auto& w : testing::all_words(ah.generators(), 6)) {
    if (!ah.is_irreducible(w)) continue;
    ++per_degree[w.size()];
    // theta1^a theta2^b x^c
    std::size_t i = 0;
    if (i < w.size() && w[i] == t1) ++i;
    if (i < w.size() && w[i] == t2) ++i;
    while (i < w.size() && w[i] == x) ++i;
    CHECK_MESSAGE(i == w.size(), word_str(w));
  }
  CHECK(per_degree[0] == 1);
  CHECK(per_degree[1] == 3);
  for (std::size_t d = 2; d <= 6; ++d) CHECK(per_degree[d] == 4);
}

TEST_CASE("unknown generator names are rejected") {
  CHECK_THROWS_AS(preset("Aq12").parse("Y*Theta1"), UnknownSymbol);
  preset("Ah12");
  CHECK_THROWS_AS(preset("Aq12").normal_form(SuperPolynomial::generator("theta1")), UnknownGenerator);
  CHECK_THROWS_AS(preset("NoSuchAlgebra"), UnknownPreset);
}
