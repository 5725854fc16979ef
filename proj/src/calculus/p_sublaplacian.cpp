#include "hardy/calculus/p_sublaplacian.hpp"

#include <cmath>

#include "hardy/errors.hpp"

namespace hardy::calculus {

using sym::make_rational;
using sym::Rational;

double FactoredLp::evaluate(std::span<const double> values) const {
  const auto& vars = norm_sq.vars();
  const double p = values[vars.index("p")];
  const double q = q_poly.evaluate(values);
  if (q == 0.0) return 0.0;
  const double ns = norm_sq.evaluate(values);
  if (!(ns > 0.0)) throw DomainError("factored L_p evaluated where the horizontal gradient vanishes");
  return std::pow(ns, (p - 4.0) / 2.0) * q;
}

FactoredLp p_sublaplacian_factored(const Frame& frame, const MultiPoly& w) {
  const auto& vars = frame.vars();
  if (!vars.contains("p")) throw StructuralError("frame ring has no exponent symbol p");
  FactoredLp out;
  out.gradient = horizontal_gradient(frame, w);
  out.norm_sq = MultiPoly(vars);
  for (const auto& g : out.gradient) out.norm_sq += g * g;

  MultiPoly div_g(vars), transport(vars);
  for (std::size_t k = 0; k < frame.dim_N(); ++k) {
    div_g += frame.apply(k, out.gradient[k]);
    transport += out.gradient[k] * frame.apply(k, out.norm_sq);
  }
  const MultiPoly half_p_minus_2 =
      (MultiPoly::variable(vars, "p") - MultiPoly::constant(vars, Rational(2))) * make_rational(1, 2);
  out.q_poly = out.norm_sq * div_g + half_p_minus_2 * transport;
  return out;
}

ScalarField p_sublaplacian_field(const Frame& frame, const ScalarField& w) {
  const auto& vars = frame.vars();
  const VectorField grad = horizontal_gradient(frame, w);
  std::vector<ScalarField> squares;
  for (const auto& g : grad.components) squares.push_back(g * g);
  const ScalarField norm_sq = ScalarField::sum(std::move(squares));
  const MultiPoly exponent =
      (MultiPoly::variable(vars, "p") - MultiPoly::constant(vars, Rational(2))) * make_rational(1, 2);
  const ScalarField scale = ScalarField::power(norm_sq, exponent);
  VectorField flux;
  flux.horizontal = true;
  for (const auto& g : grad.components) flux.components.push_back(scale * g);
  return horizontal_divergence(frame, flux);
}

double p_sublaplacian_numeric(const Frame& frame, const ScalarField& w, double p,
                              std::span<const double> point,
                              const std::map<std::string, double>& params) {
  if (point.size() != frame.dim_n()) throw StructuralError("p_sublaplacian_numeric: point arity mismatch");
  std::map<std::string, double> bind = params;
  for (std::size_t i = 0; i < point.size(); ++i) bind[sym::coord_name(i)] = point[i];
  bind["p"] = p;

  if (p < 2.0) {
    double ns = 0.0;
    for (const auto& g : horizontal_gradient(frame, w).components) {
      const double v = g.evaluate(bind);
      ns += v * v;
    }
    if (!(ns > 0.0)) throw DomainError("horizontal gradient vanishes and p < 2: L_p is singular");
  }
  return p_sublaplacian_field(frame, w).evaluate(bind);
}

double divergence_identity_check(const Frame& frame, const MultiPoly& w, double p, double gamma,
                                 const std::vector<std::vector<double>>& points) {
  const auto& vars = frame.vars();
  for (std::size_t v = frame.dim_n(); v < vars.size(); ++v)
    if (w.depends_on(v))
      throw StructuralError("divergence_identity_check: w depends on symbol '" + vars.name(v) + "'");
  const Rational p_exact = sym::rational_from_double(p);
  const Rational gamma_exact = sym::rational_from_double(gamma);

  const FactoredLp lp = p_sublaplacian_factored(frame, w);
  const MultiPoly q = lp.q_poly.substitute("p", p_exact);

  // g = gamma |grad w|^(p-2) grad w / w^(p-1)
  const ScalarField scale = ScalarField::product(
      {ScalarField::poly(MultiPoly::constant(vars, gamma_exact)),
       ScalarField::power(ScalarField::poly(lp.norm_sq), (p_exact - 2) / 2),
       ScalarField::power(ScalarField::poly(w), 1 - p_exact)});
  VectorField g;
  g.horizontal = true;
  for (const auto& gk : lp.gradient) g.components.push_back(scale * ScalarField::poly(gk));
  const ScalarField div_g = horizontal_divergence(frame, g);

  double worst = 0.0;
  std::vector<double> values(vars.size(), 0.0);
  for (const auto& x : points) {
    if (x.size() != frame.dim_n()) throw StructuralError("divergence_identity_check: point arity mismatch");
    std::copy(x.begin(), x.end(), values.begin());
    const double wv = w.evaluate(values);
    const double ns = lp.norm_sq.evaluate(values);
    if (!(wv > 0.0) || !(ns > 0.0))
      throw PreconditionError("singular test point for the divergence identity");
    const double lp_value = std::pow(ns, (p - 4.0) / 2.0) * q.evaluate(values);
    const double rhs = gamma * lp_value / std::pow(wv, p - 1.0) -
                       gamma * (p - 1.0) * std::pow(ns, p / 2.0) / std::pow(wv, p);
    const double lhs = div_g.evaluate(values);
    worst = std::max(worst, std::fabs(lhs - rhs));
  }
  return worst;
}

}  // namespace hardy::calculus
