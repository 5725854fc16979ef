#include "hardy/cli/symcheck.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hardy/calculus/horizontal.hpp"
#include "hardy/calculus/p_sublaplacian.hpp"
#include "hardy/groups/brackets.hpp"
#include "hardy/groups/builtin.hpp"
#include "hardy/inequality/hardy_spec.hpp"
#include "hardy/symbolic/parse.hpp"

namespace hardy::cli {

using groups::Frame;
using groups::PolyVectorField;
using inequality::WeightMode;
using sym::MultiPoly;

namespace {

std::vector<MultiPoly> parse_all(const sym::VarSet& vars, std::initializer_list<const char*> texts) {
  std::vector<MultiPoly> out;
  for (const char* t : texts) out.push_back(sym::parse_polynomial(t, vars));
  return out;
}

IdentityResult compare(std::string name, const std::vector<MultiPoly>& got, const std::vector<MultiPoly>& want) {
  IdentityResult r{std::move(name), true, {}};
  if (got.size() != want.size()) {
    r.pass = false;
    r.residual = "component count " + std::to_string(got.size()) + " != " + std::to_string(want.size());
    return r;
  }
  std::ostringstream res;
  res << "(";
  for (std::size_t i = 0; i < got.size(); ++i) {
    const MultiPoly diff = got[i] - want[i];
    if (!diff.is_zero()) r.pass = false;
    res << (i ? ", " : "") << diff.to_string();
  }
  res << ")";
  if (!r.pass) r.residual = res.str();
  return r;
}

IdentityResult compare(std::string name, const MultiPoly& got, const MultiPoly& want) {
  IdentityResult r{std::move(name), got == want, {}};
  if (!r.pass) r.residual = (got - want).to_string();
  return r;
}

MultiPoly sub_laplacian(const Frame& frame, const MultiPoly& w) {
  const auto g = calculus::horizontal_gradient(frame, w);
  return calculus::horizontal_divergence(frame, g);
}

/// Components of (x o y) o z - x o (y o z).
std::vector<MultiPoly> associativity_defect(const groups::GroupLaw& law, std::size_t n) {
  std::vector<std::string> names;
  for (const char* suffix : {"", "'", "''"})
    for (std::size_t i = 0; i < n; ++i) names.push_back(sym::coord_name(i) + suffix);
  const sym::VarSet ring(names);
  auto block = [&](std::size_t b) {
    std::vector<MultiPoly> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(MultiPoly::variable(ring, b * n + i));
    return v;
  };
  auto mul = [&](const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b) {
    std::vector<MultiPoly> images(a);
    images.insert(images.end(), b.begin(), b.end());
    std::vector<MultiPoly> out;
    for (const auto& c : law.product) out.push_back(c.substitute(images));
    return out;
  };
  const auto x = block(0), y = block(1), z = block(2);
  const auto left = mul(mul(x, y), z);
  const auto right = mul(x, mul(y, z));
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(left[i] - right[i]);
  return out;
}

}  // namespace

std::vector<IdentityResult> run_identity_suite(bool tamper) {
  std::vector<IdentityResult> out;

  Frame h1 = groups::make_heisenberg();
  if (tamper) h1 = h1.with_coefficient(0, 2, sym::parse_polynomial("3*x2", h1.vars()));
  const auto& hv = h1.vars();
  const Frame engel = groups::make_engel();
  const auto& ev = engel.vars();
  const Frame grushin = groups::make_grushin();
  const auto& gv = grushin.vars();

  out.push_back(compare("heisenberg.bracket.X1X2", groups::commutator(h1, 0, 1), parse_all(hv, {"0", "0", "-4"})));

  {
    const MultiPoly z = inequality::symbolic_weight_function(h1, WeightMode::Starshaped);
    const auto lp = calculus::p_sublaplacian_factored(h1, z);
    out.push_back(compare("heisenberg.starshaped.gradient", lp.gradient,
                          parse_all(hv, {"n1 + 4*x2*n3", "n2 - 4*x1*n3"})));
    out.push_back(compare("heisenberg.starshaped.Lp_zero", lp.q_poly, MultiPoly(hv)));
  }
  {
    const MultiPoly dist = inequality::symbolic_weight_function(h1, WeightMode::HalfSpace);
    const auto lp = calculus::p_sublaplacian_factored(h1, dist);
    out.push_back(compare("heisenberg.halfspace.gradient", lp.gradient,
                          parse_all(hv, {"n1 + 2*x2*n3", "n2 - 2*x1*n3"})));
    out.push_back(compare("heisenberg.halfspace.Lp_zero", lp.q_poly, MultiPoly(hv)));
  }
  {
    const auto defect = associativity_defect(*h1.descriptor()->group_law, 3);
    out.push_back(compare("heisenberg.group_law.associative", defect,
                          std::vector<MultiPoly>(3, MultiPoly(defect[0].vars()))));
  }

  {
    const MultiPoly dist = inequality::symbolic_weight_function(grushin, WeightMode::HalfSpace);
    const auto lp = calculus::p_sublaplacian_factored(grushin, dist);
    out.push_back(compare("grushin.halfspace.gradient", lp.gradient, parse_all(gv, {"n1", "x1*n2"})));
    out.push_back(compare("grushin.halfspace.Lp_closed_form", lp.q_poly,
                          sym::parse_polynomial("(p - 2)*n1*n2^2*x1", gv)));
  }

  const PolyVectorField x3 = parse_all(ev, {"0", "0", "1", "x1/2"});
  out.push_back(compare("engel.bracket.X3", groups::commutator(engel, 0, 1), x3));
  out.push_back(compare("engel.bracket.X4", groups::lie_bracket(engel.field(0), x3, 4),
                        parse_all(ev, {"0", "0", "0", "1"})));
  {
    const MultiPoly z = inequality::symbolic_weight_function(engel, WeightMode::Starshaped);
    out.push_back(compare("engel.starshaped.gradient", calculus::horizontal_gradient(engel, z),
                          parse_all(ev, {"n1 - x2*n3 - 3*x3*n4/2 - x1*x2*n4/4", "n2 + x1*n3 + x1^2*n4/4"})));
    out.push_back(compare("engel.starshaped.L_closed_form", sub_laplacian(engel, z),
                          sym::parse_polynomial("x2*n4/2", ev)));
  }
  {
    const MultiPoly dist = inequality::symbolic_weight_function(engel, WeightMode::HalfSpace);
    out.push_back(compare("engel.halfspace.gradient", calculus::horizontal_gradient(engel, dist),
                          parse_all(ev, {"n1 - x2*n3/2 - x3*n4/2 - x1*x2*n4/12", "n2 + x1*n3/2 + x1^2*n4/12"})));
    out.push_back(compare("engel.halfspace.L_closed_form", sub_laplacian(engel, dist),
                          sym::parse_polynomial("x2*n4/6", ev)));
  }
  {
    const auto defect = associativity_defect(*engel.descriptor()->group_law, 4);
    out.push_back(compare("engel.group_law.associative", defect,
                          std::vector<MultiPoly>(4, MultiPoly(defect[0].vars()))));
  }
  return out;
}

std::string format_identity_results(const std::vector<IdentityResult>& results) {
  std::size_t width = 0;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::ostringstream os;
  for (const auto& r : results) {
    os << std::string(width - r.name.size(), ' ') << r.name << (r.pass ? " PASS" : " FAIL");
    if (!r.pass) os << "  residual: " << r.residual;
    os << "\n";
  }
  return os.str();
}

}  // namespace hardy::cli
