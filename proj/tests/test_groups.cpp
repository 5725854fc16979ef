#include <doctest.h>

#include <functional>
#include <random>

#include "hardy/errors.hpp"
#include "hardy/groups/brackets.hpp"
#include "hardy/groups/builtin.hpp"
#include "hardy/groups/starshaped.hpp"
#include "hardy/symbolic/parse.hpp"
#include "test_util.hpp"

using namespace hardy;
using namespace hardy::groups;
using sym::MultiPoly;
using sym::Rational;
using sym::VarSet;

namespace {

std::vector<MultiPoly> polys(const VarSet& vars, std::initializer_list<const char*> texts) {
  std::vector<MultiPoly> out;
  for (const char* t : texts) out.push_back(sym::parse_polynomial(t, vars));
  return out;
}

std::vector<MultiPoly> apply_law(const GroupLaw& law, const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
  std::vector<MultiPoly> images(a);
  images.insert(images.end(), b.begin(), b.end());
  std::vector<MultiPoly> out;
  for (const auto& c : law.product) out.push_back(c.substitute(images));
  return out;
}

VarSet with_extra(const VarSet& base, std::initializer_list<const char*> extra) {
  auto names = base.names();
  for (const char* e : extra) names.emplace_back(e);
  return VarSet(names);
}

std::size_t rank_at(const Frame& f, std::initializer_list<long> pt, unsigned depth) {
  std::vector<Rational> x;
  for (long v : pt) x.emplace_back(v);
  return bracket_rank(f, x, depth);
}

}  // namespace

TEST_CASE("built-in frame coefficients") {
  const Frame h = make_heisenberg();
  CHECK(h.dim_n() == 3);
  CHECK(h.dim_N() == 2);
  CHECK(h.field(0) == polys(h.vars(), {"1", "0", "2*x2"}));
  CHECK(h.field(1) == polys(h.vars(), {"0", "1", "-2*x1"}));
  CHECK(h.descriptor()->weights == std::vector<unsigned>{1, 1, 2});
  CHECK(h.descriptor()->homogeneous_dimension() == 4);

  const Frame e = make_engel();
  CHECK(e.field(0) == polys(e.vars(), {"1", "0", "-x2/2", "-x3/2 - x1*x2/12"}));
  CHECK(e.field(1) == polys(e.vars(), {"0", "1", "x1/2", "x1^2/12"}));
  CHECK(e.descriptor()->strata_sizes == std::vector<std::size_t>{2, 1, 1});
  CHECK(e.descriptor()->weights == std::vector<unsigned>{1, 1, 2, 3});
  CHECK(e.descriptor()->homogeneous_dimension() == 7);

  const Frame g = make_grushin();
  CHECK(g.field(0) == polys(g.vars(), {"1", "0"}));
  CHECK(g.field(1) == polys(g.vars(), {"0", "x1"}));
  CHECK_FALSE(g.descriptor().has_value());
}

TEST_CASE("frames by name") {
  CHECK(frame_by_name("heisenberg1").dim_n() == 3);
  CHECK(frame_by_name("engel").dim_n() == 4);
  CHECK(frame_by_name("grushin").dim_n() == 2);
  CHECK_THROWS_AS(frame_by_name("/nonexistent/frame.txt"), Error);
}

TEST_CASE("frame definition files") {
  const Frame f = parse_frame_definition("# Heisenberg\n1, 0, 2*x2\n0, 1, -2*x1\nstrata: 2,1\n");
  const Frame h = make_heisenberg();
  CHECK(f.dim_n() == 3);
  CHECK(f.field(0) == h.field(0));
  CHECK(f.field(1) == h.field(1));
  REQUIRE(f.descriptor().has_value());
  CHECK(f.descriptor()->weights == h.descriptor()->weights);
  CHECK(rank_at(f, {0, 0, 0}, 2) == 3);

  CHECK_THROWS_AS(parse_frame_definition("1, 0\n0, 1, x1\n"), ParseError);
  CHECK_THROWS_AS(parse_frame_definition("1, 0, y9\n"), ParseError);
  CHECK_THROWS_AS(parse_frame_definition("# nothing\n"), ParseError);
}

TEST_CASE("group laws") {
  for (const Frame& f : {make_heisenberg(), make_engel()}) {
    const auto& law = *f.descriptor()->group_law;
    const std::size_t n = f.dim_n();
    std::vector<MultiPoly> x, minus_x, zero;
    for (std::size_t i = 0; i < n; ++i) {
      x.push_back(MultiPoly::variable(law.vars, i));
      minus_x.push_back(-x.back());
      zero.emplace_back(law.vars);
    }
    CHECK(apply_law(law, x, minus_x) == zero);
    CHECK(apply_law(law, x, zero) == x);
    CHECK(apply_law(law, zero, x) == x);
  }

  const Frame e = make_engel();
  const auto& law = *e.descriptor()->group_law;
  CHECK(law.product[2] == sym::parse_polynomial("x3 + x3' + (x1*x2' - x2*x1')/2", law.vars));
}

TEST_CASE("group laws are dilation homogeneous and associative") {
  for (const Frame& f : {make_heisenberg(), make_engel()}) {
    const auto& desc = *f.descriptor();
    const auto& law = *desc.group_law;
    const std::size_t n = f.dim_n();
    const VarSet ring = with_extra(law.vars, {"lam"});
    const MultiPoly lam = MultiPoly::variable(ring, "lam");
    std::vector<MultiPoly> x, xp, dx, dxp;
    for (std::size_t i = 0; i < n; ++i) {
      x.push_back(MultiPoly::variable(ring, i));
      xp.push_back(MultiPoly::variable(ring, n + i));
      dx.push_back(lam.pow(desc.weights[i]) * x.back());
      dxp.push_back(lam.pow(desc.weights[i]) * xp.back());
    }
    const auto lhs = apply_law(law, dx, dxp);
    const auto prod = apply_law(law, x, xp);
    for (std::size_t i = 0; i < n; ++i) CHECK(lhs[i] == lam.pow(desc.weights[i]) * prod[i]);

    std::vector<std::string> names;
    for (const char* suffix : {"", "'", "''"})
      for (std::size_t i = 0; i < n; ++i) names.push_back(sym::coord_name(i) + suffix);
    const VarSet three(names);
    std::vector<MultiPoly> lifted3;
    std::vector<MultiPoly> embed;
    for (std::size_t i = 0; i < 2 * n; ++i) embed.push_back(MultiPoly::variable(three, i));
    for (const auto& c : law.product) lifted3.push_back(c.substitute(embed));
    const GroupLaw law3{three, lifted3};
    std::vector<MultiPoly> a, b, c;
    for (std::size_t i = 0; i < n; ++i) {
      a.push_back(MultiPoly::variable(three, i));
      b.push_back(MultiPoly::variable(three, n + i));
      c.push_back(MultiPoly::variable(three, 2 * n + i));
    }
    // law3 ignores its third block, so composing through it is law composition.
    std::vector<MultiPoly> pad(n, MultiPoly(three));
    auto mul = [&](const std::vector<MultiPoly>& u, const std::vector<MultiPoly>& v) {
      std::vector<MultiPoly> images(u);
      images.insert(images.end(), v.begin(), v.end());
      images.insert(images.end(), pad.begin(), pad.end());
      std::vector<MultiPoly> out;
      for (const auto& comp : law3.product) out.push_back(comp.substitute(images));
      return out;
    };
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
  }
}

TEST_CASE("commutators") {
  const Frame h = make_heisenberg();
  CHECK(commutator(h, 0, 1) == polys(h.vars(), {"0", "0", "-4"}));
  const Frame e = make_engel();
  CHECK(commutator(e, 0, 1) == polys(e.vars(), {"0", "0", "1", "x1/2"}));
  CHECK(lie_bracket(e.field(0), commutator(e, 0, 1), 4) == polys(e.vars(), {"0", "0", "0", "1"}));
  const Frame g = make_grushin();
  CHECK(commutator(g, 0, 1) == polys(g.vars(), {"0", "1"}));

  for (const Frame& f : {h, e, g}) {
    for (std::size_t i = 0; i < f.dim_N(); ++i) {
      for (std::size_t j = 0; j < f.dim_N(); ++j) {
        auto neg = commutator(f, j, i);
        for (auto& c : neg) c = -c;
        CHECK(commutator(f, i, j) == neg);
      }
      for (const auto& c : commutator(f, i, i)) CHECK(c.is_zero());
    }
    CHECK_THROWS_AS(commutator(f, 0, f.dim_N()), StructuralError);
  }
}

TEST_CASE("bracket rank") {
  CHECK(rank_at(make_heisenberg(), {0, 0, 0}, 2) == 3);
  CHECK(rank_at(make_heisenberg(), {3, -1, 7}, 2) == 3);
  CHECK(rank_at(make_heisenberg(), {0, 0, 0}, 1) == 2);
  const Frame g = make_grushin();
  CHECK(rank_at(g, {0, 0}, 1) == 1);
  CHECK(rank_at(g, {0, 0}, 2) == 2);
  CHECK(rank_at(g, {1, 0}, 1) == 2);
  const Frame e = make_engel();
  CHECK(rank_at(e, {0, 0, 0, 0}, 2) == 3);
  CHECK(rank_at(e, {0, 0, 0, 0}, 3) == 4);

  const std::vector<double> xd{0.3, -1.2, 0.5, 2.0};
  CHECK(bracket_rank(e, xd, 3) == 4);
  const std::vector<double> gd{0.0, 0.7};
  CHECK(bracket_rank(g, gd, 1) == 1);
  CHECK_THROWS_AS(bracket_rank(g, gd, 0), DomainError);
}

TEST_CASE("generator Z and the Euler relation") {
  const Frame h = make_heisenberg();
  CHECK(z_generator(*h.descriptor(), h.vars()) == polys(h.vars(), {"x1", "x2", "2*x3"}));
  const Frame e = make_engel();
  CHECK(z_generator(*e.descriptor(), e.vars()) == polys(e.vars(), {"x1", "x2", "2*x3", "3*x4"}));

  for (const Frame& f : {h, e}) {
    const auto& desc = *f.descriptor();
    const auto z = z_generator(desc, f.vars());
    const std::size_t n = f.dim_n();
    std::size_t checked = 0;
    sym::Monomial m(f.vars().size(), 0);
    std::function<void(std::size_t, unsigned)> visit = [&](std::size_t i, unsigned deg) {
      if (i == n) {
        const auto mono = MultiPoly::monomial(f.vars(), m, Rational(1));
        CHECK(apply_field(z, mono) == Rational(deg) * mono);
        ++checked;
        return;
      }
      for (unsigned e = 0; deg + e * desc.weights[i] <= 6; ++e) {
        m[i] = e;
        visit(i + 1, deg + e * desc.weights[i]);
      }
      m[i] = 0;
    };
    visit(0, 0);
    CHECK(checked > 20);
  }
}

TEST_CASE("stratified homogeneity of the frames") {
  for (const Frame& base : {make_heisenberg(), make_engel()}) {
    const auto& desc = *base.descriptor();
    const VarSet ring = with_extra(base.vars(), {"lam"});
    const Frame f = base.rebased(ring);
    const MultiPoly lam = MultiPoly::variable(ring, "lam");
    const std::size_t n = f.dim_n();
    std::vector<MultiPoly> dil;
    for (std::size_t v = 0; v < ring.size(); ++v) {
      auto var = MultiPoly::variable(ring, v);
      dil.push_back(v < n ? lam.pow(desc.weights[v]) * var : var);
    }
    sym::Monomial m(ring.size(), 0);
    std::function<void(std::size_t, unsigned)> visit = [&](std::size_t i, unsigned deg) {
      if (i == n) {
        const auto mono = MultiPoly::monomial(ring, m, Rational(1));
        for (std::size_t k = 0; k < f.dim_N(); ++k)
          REQUIRE(f.apply(k, mono.substitute(dil)) == lam * f.apply(k, mono).substitute(dil));
        return;
      }
      for (unsigned e = 0; deg + e <= 4; ++e) {
        m[i] = e;
        visit(i + 1, deg + e);
      }
      m[i] = 0;
    };
    visit(0, 0);
  }
}

TEST_CASE("dilations") {
  const Frame h = make_heisenberg();
  const auto& desc = *h.descriptor();
  CHECK(desc.dilate({1.0, 2.0, 3.0}, 2.0) == std::vector<double>{2.0, 4.0, 12.0});
  CHECK_THROWS_AS(StratifiedDescriptor::from_strata({}).validate(), Error);
}

TEST_CASE("starshaped check examples") {
  const Frame h = make_heisenberg();
  const auto& desc = *h.descriptor();
  const auto& v = h.vars();

  const auto ball = starshaped_check(desc, sym::parse_polynomial("x1^2 + x2^2 + x3^2 - 1", v));
  CHECK(ball.verdict == StarshapedVerdict::StrictlyStarshaped);
  CHECK(ball.boundary_points == 512);
  CHECK(ball.min_value > 0.0);

  const auto half = starshaped_check(desc, sym::parse_polynomial("-x3", v));
  CHECK(half.verdict == StarshapedVerdict::Starshaped);
  CHECK(std::abs(half.min_value) <= 1e-10);

  const auto off = starshaped_check(desc, sym::parse_polynomial("(x1 - 2)^2 + x2^2 + x3^2 - 1", v));
  CHECK(off.verdict == StarshapedVerdict::Violated);
  REQUIRE(off.witness.size() == 3);
  CHECK(off.min_value < -1e-10);
  const double r = (off.witness[0] - 2) * (off.witness[0] - 2) + off.witness[1] * off.witness[1] +
                   off.witness[2] * off.witness[2];
  CHECK(r == doctest::Approx(1.0).epsilon(1e-9));

  CHECK(to_string(StarshapedVerdict::StrictlyStarshaped) == "strictly_starshaped");
  CHECK(to_string(StarshapedVerdict::Starshaped) == "starshaped");
  CHECK(to_string(StarshapedVerdict::Violated) == "violated");
}

TEST_CASE("starshaped check errors") {
  const Frame h = make_heisenberg();
  const auto& desc = *h.descriptor();
  const auto& v = h.vars();
  CHECK_THROWS_AS(starshaped_check(desc, sym::parse_polynomial("x1^2 + x2^2 + x3^2 + 1", v)), SamplingError);
  CHECK_THROWS_AS(starshaped_check(desc, sym::parse_polynomial("x1^2 + x2^2 + x3^2", v)),
                  DegenerateBoundaryError);
}

TEST_CASE("property: starshaped verdict is invariant under positive scaling") {
  const Frame e = make_engel();
  const auto& desc = *e.descriptor();
  const auto& v = e.vars();
  const std::vector<const char*> sets{"x1^2 + x2^2 + x3^2 + x4^2 - 1", "(x1 - 2)^2 + x2^2 + x3^2 + x4^2 - 1",
                                      "x1^2 + x2^2 + x3^2 + x4^2 - 1 + x4/2", "-x4"};
  for (const char* text : sets) {
    const auto phi = sym::parse_polynomial(text, v);
    StarshapedOptions opts;
    opts.samples = 128;
    const auto base = starshaped_check(desc, phi, opts);
    for (const Rational c : {Rational(1, 3), Rational(7), Rational(1000)}) {
      const auto scaled = starshaped_check(desc, c * phi, opts);
      CHECK(scaled.verdict == base.verdict);
    }
  }
}

TEST_CASE("starshaped check is deterministic") {
  const Frame h = make_heisenberg();
  const auto phi = sym::parse_polynomial("(x1 - 1/2)^2 + x2^2 + 3*x3^2 - 2", h.vars());
  StarshapedOptions opts;
  opts.seed = 99;
  const auto a = starshaped_check(*h.descriptor(), phi, opts);
  const auto b = starshaped_check(*h.descriptor(), phi, opts);
  CHECK(a.min_value == b.min_value);
  CHECK(a.witness == b.witness);
}
