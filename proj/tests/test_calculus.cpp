#include <doctest.h>

#include <cmath>
#include <random>

#include "hardy/calculus/horizontal.hpp"
#include "hardy/calculus/p_sublaplacian.hpp"
#include "hardy/errors.hpp"
#include "hardy/groups/builtin.hpp"
#include "hardy/symbolic/parse.hpp"
#include "test_util.hpp"

using namespace hardy;
using namespace hardy::calculus;
using groups::Frame;
using sym::MultiPoly;
using sym::Rational;
using sym::ScalarField;

namespace {

std::vector<MultiPoly> polys(const sym::VarSet& vars, std::initializer_list<const char*> texts) {
  std::vector<MultiPoly> out;
  for (const char* t : texts) out.push_back(sym::parse_polynomial(t, vars));
  return out;
}

MultiPoly P(const Frame& f, const char* text) { return sym::parse_polynomial(text, f.vars()); }

struct PaperCase {
  Frame frame;
  const char* weight;
};

std::vector<PaperCase> paper_cases() {
  return {
      {groups::make_heisenberg(), "x1*n1 + x2*n2 + 2*x3*n3"},
      {groups::make_heisenberg(), "x1*n1 + x2*n2 + x3*n3 - d"},
      {groups::make_engel(), "x1*n1 + x2*n2 + 2*x3*n3 + 3*x4*n4"},
      {groups::make_engel(), "x1*n1 + x2*n2 + x3*n3 + x4*n4 - d"},
      {groups::make_grushin(), "x1*n1 + x2*n2 - d"},
  };
}

}  // namespace

TEST_CASE("horizontal gradient examples") {
  const Frame h = groups::make_heisenberg();
  CHECK(horizontal_gradient(h, P(h, "x1*n1 + x2*n2 + 2*x3*n3")) == polys(h.vars(), {"n1 + 4*x2*n3", "n2 - 4*x1*n3"}));
  const Frame g = groups::make_grushin();
  CHECK(horizontal_gradient(g, P(g, "x1*n1 + x2*n2 - d")) == polys(g.vars(), {"n1", "x1*n2"}));
  const Frame e = groups::make_engel();
  CHECK(horizontal_gradient(e, P(e, "x1*n1 + x2*n2 + x3*n3 + x4*n4 - d")) ==
        polys(e.vars(), {"n1 - x2*n3/2 - x3*n4/2 - x1*x2*n4/12", "n2 + x1*n3/2 + x1^2*n4/12"}));
  CHECK_THROWS_AS(horizontal_gradient(h, sym::parse_polynomial("x1", sym::standard_vars(2))), StructuralError);
}

TEST_CASE("horizontal divergence examples") {
  const Frame h = groups::make_heisenberg();
  CHECK(horizontal_divergence(h, polys(h.vars(), {"x2", "-x1"})).is_zero());
  CHECK(horizontal_divergence(h, polys(h.vars(), {"x1", "x2"})) == P(h, "2"));
  const Frame e = groups::make_engel();
  const auto grad = horizontal_gradient(e, P(e, "x1*n1 + x2*n2 + 2*x3*n3 + 3*x4*n4"));
  CHECK(horizontal_divergence(e, grad) == P(e, "x2*n4/2"));
  CHECK_THROWS_AS(horizontal_divergence(h, polys(h.vars(), {"x1"})), StructuralError);
}

TEST_CASE("factored p-sub-Laplacian examples") {
  const Frame h = groups::make_heisenberg();
  CHECK(p_sublaplacian_factored(h, P(h, "x1*n1 + x2*n2 + 2*x3*n3")).vanishes());
  CHECK(p_sublaplacian_factored(h, P(h, "x1*n1 + x2*n2 + x3*n3 - d")).vanishes());
  const Frame g = groups::make_grushin();
  const auto lp = p_sublaplacian_factored(g, P(g, "x1*n1 + x2*n2 - d"));
  CHECK(lp.q_poly == P(g, "(p - 2)*n1*n2^2*x1"));
  CHECK(lp.norm_sq == P(g, "n1^2 + x1^2*n2^2"));
  CHECK_FALSE(lp.vanishes());

  // Evaluated against the closed form (p-2)|grad|^(p-4) n1 n2^2 x1.
  std::vector<double> at(g.vars().size(), 0.0);
  at[0] = 0.7;
  at[1] = -0.3;
  at[g.vars().index("n1")] = 0.6;
  at[g.vars().index("n2")] = 0.8;
  at[g.vars().index("p")] = 3.5;
  const double ns = 0.36 + 0.49 * 0.64;
  CHECK(lp.evaluate(at) == doctest::Approx(1.5 * std::pow(ns, -0.25) * 0.6 * 0.64 * 0.7).epsilon(1e-13));
}

TEST_CASE("numeric p-sub-Laplacian examples") {
  const Frame e = groups::make_engel();
  const auto w = ScalarField::poly(P(e, "x1*n1 + x2*n2 + x3*n3 + x4*n4 - d"));
  const std::map<std::string, double> params{{"n1", 0.3}, {"n2", -0.4}, {"n3", 1.1}, {"n4", 0.9}, {"d", 0.2}};
  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const auto x = testutil::random_point(rng, 4, -1.0, 1.0);
    CHECK(p_sublaplacian_numeric(e, w, 2.0, x, params) == doctest::Approx(x[1] * 0.9 / 6).epsilon(1e-12).scale(1.0));
  }

  const Frame h = groups::make_heisenberg();
  const auto lin = ScalarField::poly(P(h, "3*x1 - x2"));
  CHECK(p_sublaplacian_numeric(h, lin, 3.3, std::vector<double>{0.2, 0.4, -1.0}) == doctest::Approx(0.0));

  const auto vert = ScalarField::poly(P(h, "x3"));
  CHECK_THROWS_AS(p_sublaplacian_numeric(h, vert, 1.5, std::vector<double>{0.0, 0.0, 1.0}), DomainError);
  CHECK(p_sublaplacian_numeric(h, vert, 2.5, std::vector<double>{0.5, 0.0, 1.0}) == doctest::Approx(0.0));
}

TEST_CASE("property: factored and numeric p-sub-Laplacians agree") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-1.0, 1.0), up(1.2, 4.0);
  for (const auto& c : paper_cases()) {
    const auto& vars = c.frame.vars();
    const MultiPoly w = P(c.frame, c.weight);
    const auto lp = p_sublaplacian_factored(c.frame, w);
    const auto field = ScalarField::poly(w);
    int compared = 0;
    for (int t = 0; t < 100; ++t) {
      std::vector<double> values(vars.size());
      for (auto& v : values) v = u(rng);
      const double p = up(rng);
      values[vars.index("p")] = p;
      if (lp.norm_sq.evaluate(values) <= 1e-6) continue;
      std::map<std::string, double> params;
      for (std::size_t v = c.frame.dim_n(); v < vars.size(); ++v) params[vars.name(v)] = values[v];
      const std::vector<double> x(values.begin(), values.begin() + static_cast<long>(c.frame.dim_n()));
      const double factored = lp.evaluate(values);
      const double numeric = p_sublaplacian_numeric(c.frame, field, p, x, params);
      REQUIRE(numeric == doctest::Approx(factored).epsilon(1e-9).scale(1e-12));
      ++compared;
    }
    CHECK(compared > 90);
  }
}

TEST_CASE("property: p = 2 reduces to the sub-Laplacian") {
  std::mt19937_64 rng(23);
  for (const Frame& f : {groups::make_heisenberg(), groups::make_engel(), groups::make_grushin()}) {
    for (int t = 0; t < 20; ++t) {
      const auto w = testutil::random_poly(rng, f.vars(), f.dim_n(), 3, 5);
      const auto lp = p_sublaplacian_factored(f, w);
      MultiPoly sub(f.vars()), div(f.vars());
      for (std::size_t k = 0; k < f.dim_N(); ++k) {
        sub += f.apply(k, f.apply(k, w));
        div += f.apply(k, lp.gradient[k]);
      }
      REQUIRE(div == sub);
      REQUIRE(lp.q_poly.substitute("p", Rational(2)) == lp.norm_sq * sub);
      REQUIRE(lp.q_poly.partial("p").partial("p").is_zero());
    }
  }
}

TEST_CASE("property: horizontal divergence product rule and linearity") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> num(-5, 5);
  for (const Frame& f : {groups::make_heisenberg(), groups::make_engel(), groups::make_grushin()}) {
    const auto& vars = f.vars();
    for (int t = 0; t < 50; ++t) {
      const auto phi = testutil::random_poly(rng, vars, f.dim_n(), 3, 4);
      std::vector<MultiPoly> F, G, phiF, mix;
      for (std::size_t k = 0; k < f.dim_N(); ++k) {
        F.push_back(testutil::random_poly(rng, vars, f.dim_n(), 3, 4));
        G.push_back(testutil::random_poly(rng, vars, f.dim_n(), 3, 4));
        phiF.push_back(phi * F.back());
      }
      const auto grad_phi = horizontal_gradient(f, phi);
      MultiPoly inner(vars);
      for (std::size_t k = 0; k < f.dim_N(); ++k) inner += grad_phi[k] * F[k];
      REQUIRE(horizontal_divergence(f, phiF) == inner + phi * horizontal_divergence(f, F));

      const Rational a(num(rng), 3), b(num(rng), 7);
      for (std::size_t k = 0; k < f.dim_N(); ++k) mix.push_back(a * F[k] + b * G[k]);
      REQUIRE(horizontal_divergence(f, mix) == a * horizontal_divergence(f, F) + b * horizontal_divergence(f, G));

      const auto psi = testutil::random_poly(rng, vars, f.dim_n(), 3, 4);
      const auto lhs = horizontal_gradient(f, a * phi + b * psi);
      const auto gp = horizontal_gradient(f, psi);
      for (std::size_t k = 0; k < f.dim_N(); ++k) REQUIRE(lhs[k] == a * grad_phi[k] + b * gp[k]);
    }
  }
}

TEST_CASE("expression-tree gradient agrees with the polynomial one") {
  const Frame e = groups::make_engel();
  const auto w = P(e, "x1*x4 + x2^2*x3 - 3*x4");
  const auto exact = horizontal_gradient(e, w);
  const auto tree = horizontal_gradient(e, ScalarField::poly(w));
  CHECK(tree.horizontal);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    const auto x = testutil::random_point(rng, e.vars().size(), -1.0, 1.0);
    for (std::size_t k = 0; k < 2; ++k) CHECK(tree[k].evaluate(x) == doctest::Approx(exact[k].evaluate(x)));
  }
}

TEST_CASE("divergence identity check") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(-1.0, 1.0), up(0.1, 2.0);

  const Frame h = groups::make_heisenberg();
  std::vector<std::vector<double>> pts;
  for (int t = 0; t < 50; ++t) pts.push_back({u(rng), u(rng), 0.1 + up(rng)});
  const auto wh = P(h, "x3");
  for (double p : {1.5, 2.0, 3.0}) {
    const double gamma = -std::pow((p - 1) / p, p - 1);
    CHECK(divergence_identity_check(h, wh, p, gamma, pts) < 1e-8);
  }
  CHECK(divergence_identity_check(h, wh, 2.0, 0.0, pts) == 0.0);

  const Frame g = groups::make_grushin();
  std::vector<std::vector<double>> gpts;
  for (int t = 0; t < 50; ++t) gpts.push_back({up(rng), up(rng)});
  CHECK(divergence_identity_check(g, P(g, "x1 + x2"), 2.0, -0.5, gpts) < 1e-8);
  CHECK(divergence_identity_check(g, P(g, "x1"), 2.0, -0.5, gpts) < 1e-8);

  CHECK_THROWS_AS(divergence_identity_check(h, wh, 2.0, -0.5, {{0.5, 0.5, -1.0}}), PreconditionError);
  CHECK_THROWS_AS(divergence_identity_check(h, wh, 2.0, -0.5, {{0.0, 0.0, 1.0}}), PreconditionError);
  CHECK_THROWS_AS(divergence_identity_check(h, P(h, "x3 - d"), 2.0, -0.5, pts), StructuralError);
}
