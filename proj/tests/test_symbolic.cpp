#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "hardy/errors.hpp"
#include "hardy/symbolic/horner.hpp"
#include "hardy/symbolic/multipoly.hpp"
#include "hardy/symbolic/parse.hpp"
#include "hardy/symbolic/scalar_field.hpp"
#include "test_util.hpp"

using namespace hardy;
using namespace hardy::sym;

namespace {

const VarSet R3 = standard_vars(3);
MultiPoly P(const char* text, const VarSet& vars = R3) { return parse_polynomial(text, vars); }

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7/12") == Rational(-7, 12));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-0.5") == Rational(-1, 2));
  CHECK(parse_rational("010") == 10);
  CHECK(parse_rational("0.48") == Rational(12, 25));
  CHECK(parse_rational("-1.5e-3") == Rational(-3, 2000));
  CHECK(parse_rational("2e3") == 2000);
  CHECK(parse_rational("0.1") == Rational(1, 10));

  const Rational zero = parse_rational("0/5");
  CHECK(zero.get_num() == 0);
  CHECK(zero.get_den() == 1);
  const Rational neg = parse_rational("-6/8");
  CHECK(neg.get_num() == -3);
  CHECK(neg.get_den() == 4);

  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
}

TEST_CASE("rational to double rounds correctly") {
  CHECK(to_double(parse_rational("0.64")) == 0.64);
  CHECK(to_double(parse_rational("1/3")) == 1.0 / 3.0);
  CHECK(rational_from_double(0.1) != Rational(1, 10));
  CHECK(to_double(rational_from_double(0.1)) == 0.1);
  CHECK_THROWS_AS(rational_from_double(NAN), DomainError);
}

TEST_CASE("poly_add examples") {
  CHECK(poly_add(P("x1 + x2"), P("-x2")) == P("x1"));
  const auto q = P("3*x1^2*n2 - x3/7 + 5");
  CHECK(poly_add(MultiPoly(R3), q) == q);
  CHECK(poly_add(P("x1^2"), P("x1^2")) == P("2*x1^2"));
  CHECK(poly_add(P("x1^2"), P("x1^2")).to_string() == "2*x1^2");
}

TEST_CASE("poly_mul examples") {
  CHECK(poly_mul(P("x1 + x2"), P("x1 - x2")) == P("x1^2 - x2^2"));
  const auto q = P("x1*n1 + 2*x3*n3 - d");
  CHECK(poly_mul(q, MultiPoly::constant(R3, Rational(1))) == q);
  // Independent term-by-term expansion.
  MultiPoly expected(R3);
  for (const auto& a : {P("n1"), P("4*x2*n3")})
    for (const auto& b : {P("n2"), P("-4*x1*n3")}) expected += a * b;
  const auto prod = poly_mul(P("n1 + 4*x2*n3"), P("n2 - 4*x1*n3"));
  CHECK(prod == expected);
  CHECK(prod == P("n1*n2 - 4*x1*n1*n3 + 4*x2*n2*n3 - 16*x1*x2*n3^2"));
}

TEST_CASE("ring mismatch is a structural error") {
  const VarSet other = standard_vars(2);
  CHECK_THROWS_AS(poly_add(P("x1"), parse_polynomial("x1", other)), StructuralError);
  CHECK_THROWS_AS(poly_mul(P("x1"), parse_polynomial("x1", other)), StructuralError);
  try {
    poly_add(P("x1"), parse_polynomial("x1", other));
  } catch (const StructuralError& e) {
    CHECK(std::string(e.what()).find("variable-list mismatch") != std::string::npos);
  }
}

TEST_CASE("partial derivative examples") {
  CHECK(partial(P("x1^2*x2"), "x1") == P("2*x1*x2"));
  CHECK(partial(P("x1*n1 + x2*n2 + 2*x3*n3"), "x3") == P("2*n3"));
  CHECK(partial(P("17/3"), "x2").is_zero());
  CHECK_THROWS_AS(partial(P("x1"), "y7"), StructuralError);
}

TEST_CASE("deterministic graded-lex printing") {
  CHECK(P("n3*x1^2*2 - 1/2").to_string() == "2*x1^2*n3 - 1/2");
  CHECK(P("x2 + x1 + x1^2").to_string() == "x1^2 + x1 + x2");
  CHECK(MultiPoly(R3).to_string() == "0");
  CHECK(P("-x1").to_string() == "-x1");
}

TEST_CASE("substitution and rebase") {
  const auto q = P("x1*n1 + x2*n2 - d");
  const auto s = q.substitute("n1", Rational(0)).substitute("n2", Rational(1)).substitute("d", Rational(2));
  CHECK(s == P("x2 - 2"));
  const auto r = P("x1^2").rebase(standard_vars(4));
  CHECK(r.vars() == standard_vars(4));
  CHECK(r == parse_polynomial("x1^2", standard_vars(4)));
  CHECK_THROWS_AS(P("x3").rebase(standard_vars(2)), StructuralError);
}

TEST_CASE("property: canonical-form equality q + (-1)q == 0") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 1000; ++t) {
    const auto q = testutil::random_poly(rng, R3, R3.size(), 4, 8);
    const auto r = poly_add(q, poly_mul(MultiPoly::constant(R3, Rational(-1)), q));
    REQUIRE(r.terms().empty());
  }
}

TEST_CASE("property: partials commute and Leibniz holds exactly") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const auto a = testutil::random_poly(rng, R3, R3.size(), 4, 6);
    const auto b = testutil::random_poly(rng, R3, R3.size(), 4, 6);
    std::uniform_int_distribution<std::size_t> pick(0, R3.size() - 1);
    const std::size_t u = pick(rng), v = pick(rng);
    REQUIRE(a.partial(u).partial(v) == a.partial(v).partial(u));
    REQUIRE((a * b).partial(u) == a.partial(u) * b + a * b.partial(u));
  }
}

TEST_CASE("property: Horner evaluation agrees with term evaluation") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 200; ++t) {
    const auto q = testutil::random_poly(rng, R3, R3.size(), 5, 10);
    const HornerPoly h(q);
    const auto x = testutil::random_point(rng, R3.size(), -2.0, 2.0);
    const double exact = q.evaluate(x);
    REQUIRE(h(x) == doctest::Approx(exact).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("polynomial parser") {
  CHECK(P("(x1 + 1)^2") == P("x1^2 + 2*x1 + 1"));
  CHECK(P("x1/2") == P("1/2*x1"));
  CHECK(P("-(x1 - x2)") == P("x2 - x1"));
  CHECK(P("2*(x1 + x2)*x3") == P("2*x1*x3 + 2*x2*x3"));
  CHECK(P("0.5*x1") == P("x1/2"));
  CHECK(P("x1 − x2") == P("x1 - x2"));
  CHECK_THROWS_AS(P("x1 +"), ParseError);
  CHECK_THROWS_AS(P("x1 / x2"), ParseError);
  CHECK_THROWS_AS(P("x1 / 0"), ParseError);
  CHECK_THROWS_AS(P("q7 + 1"), ParseError);
  CHECK_THROWS_AS(P("(x1"), ParseError);
  CHECK_THROWS_AS(P("x1^-1"), ParseError);
  try {
    P("x1 + $");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
}

TEST_CASE("scalar field evaluation examples") {
  const auto w = ScalarField::poly(P("x1*n1 + x2*n2 + 2*x3*n3"));
  CHECK(evaluate(w, {{"x1", 1}, {"x2", 2}, {"x3", 3}, {"n1", 0}, {"n2", 0}, {"n3", 1}}) == 6.0);

  const auto root = ScalarField::power(ScalarField::poly(P("x1^2")), Rational(1, 2));
  CHECK(evaluate(root, {{"x1", -2.0}}) == doctest::Approx(2.0));

  const auto pw = ScalarField::power(ScalarField::poly(P("x1")), P("p - 2"));
  CHECK(evaluate(pw, {{"x1", 2.0}, {"p", 3.0}}) == doctest::Approx(2.0));
}

TEST_CASE("scalar field evaluation errors") {
  const auto pw = ScalarField::power(ScalarField::poly(P("x1")), P("p - 2"));
  CHECK_THROWS_AS(evaluate(pw, {{"x1", 2.0}}), StructuralError);
  CHECK_THROWS_AS(evaluate(pw, {{"x1", -1.0}, {"p", 2.5}}), DomainError);
  CHECK_THROWS_AS(evaluate(pw, {{"x1", 0.0}, {"p", 2.5}}), DomainError);
  // Integer exponents accept negative bases.
  CHECK(evaluate(pw, {{"x1", -3.0}, {"p", 4.0}}) == doctest::Approx(9.0));
  const auto inv = ScalarField::power(ScalarField::poly(P("x1")), Rational(-1));
  CHECK_THROWS_AS(evaluate(inv, {{"x1", 0.0}}), DomainError);
}

TEST_CASE("scalar field differentiation examples") {
  const auto cube = ScalarField::power(ScalarField::poly(P("x1")), Rational(3));
  const auto d = differentiate(cube, "x1");
  CHECK(evaluate(d, {{"x1", 1.5}}) == doctest::Approx(3 * 1.5 * 1.5));

  const VarSet g = standard_vars(2);
  const auto base = ScalarField::poly(parse_polynomial("n1^2 + x1^2*n2^2", g));
  const auto f = ScalarField::power(base, parse_polynomial("p/2", g));
  const auto df = differentiate(f, "x1");
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    std::map<std::string, double> at{{"x1", 0.0}, {"n1", 0.0}, {"n2", 0.0}, {"p", 0.0}};
    std::uniform_real_distribution<double> u(-2, 2), up(1.1, 4);
    at["x1"] = u(rng);
    at["n1"] = u(rng);
    at["n2"] = u(rng);
    at["p"] = up(rng);
    const double b = at["n1"] * at["n1"] + at["x1"] * at["x1"] * at["n2"] * at["n2"];
    const double expected = at["p"] / 2 * std::pow(b, at["p"] / 2 - 1) * 2 * at["x1"] * at["n2"] * at["n2"];
    CHECK(evaluate(df, at) == doctest::Approx(expected).epsilon(1e-10));
  }

  const auto indep = ScalarField::power(ScalarField::poly(P("x1")), P("p"));
  CHECK(differentiate(indep, "x2").is_zero());

  const auto bad = ScalarField::power(ScalarField::poly(P("x1 + 2")), P("x1"));
  CHECK_THROWS_AS(differentiate(bad, "x1"), StructuralError);
}

TEST_CASE("property: symbolic derivatives match central differences") {
  const VarSet v = standard_vars(2);
  const auto ns = ScalarField::poly(parse_polynomial("1 + x1^2 + x2^2*x1^2", v));
  const auto w = ScalarField::poly(parse_polynomial("x1 + 3", v));
  const std::vector<ScalarField> fields{
      ScalarField::product({ScalarField::power(ns, Rational(3, 4)), ScalarField::power(w, Rational(-3, 2))}),
      ScalarField::sum({ScalarField::power(ns, Rational(1, 2)), ScalarField::constant(v, 2.5) * w}),
      ScalarField::power(ScalarField::product({ns, w}), Rational(-1, 3)),
  };
  std::mt19937_64 rng(21);
  for (const auto& f : fields) {
    for (std::size_t var = 0; var < 2; ++var) {
      const auto df = f.differentiate(var);
      for (int t = 0; t < 100; ++t) {
        auto x = testutil::random_point(rng, v.size(), -1.0, 1.0);
        const double h = 1e-5;
        auto xp = x, xm = x;
        xp[var] += h;
        xm[var] -= h;
        const double fd = (f.evaluate(xp) - f.evaluate(xm)) / (2 * h);
        const double exact = df.evaluate(x);
        REQUIRE(fd == doctest::Approx(exact).epsilon(1e-6).scale(1.0));
      }
    }
  }
}
