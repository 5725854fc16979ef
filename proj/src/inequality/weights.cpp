#include "hardy/inequality/weights.hpp"

#include "hardy/errors.hpp"

namespace hardy::inequality {

using sym::rational_from_double;

namespace {

MultiPoly specialize(const MultiPoly& q, const HardySpec& spec) {
  const auto& vars = q.vars();
  std::vector<MultiPoly> images;
  images.reserve(vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v) images.push_back(MultiPoly::variable(vars, v));
  for (std::size_t i = 0; i < spec.normal.n.size(); ++i)
    images[vars.index(sym::normal_name(i))] = MultiPoly::constant(vars, spec.normal.n[i]);
  if (spec.normal.d) images[vars.index("d")] = MultiPoly::constant(vars, *spec.normal.d);
  return q.substitute(images);
}

}  // namespace

WeightData weight_data(const HardySpec& spec) {
  spec.validate();
  WeightData out;
  out.w = weight_function(spec);
  out.lp = calculus::p_sublaplacian_factored(spec.frame, out.w);
  out.lp.q_poly = specialize(out.lp.q_poly, spec);
  out.q_at_p = out.lp.q_poly.substitute("p", rational_from_double(spec.p));
  return out;
}

WeightFields weight_fields(const HardySpec& spec) { return weight_fields(spec, weight_data(spec)); }

WeightFields weight_fields(const HardySpec& spec, const WeightData& data) {
  const Rational p = rational_from_double(spec.p);
  const auto& vars = data.w.vars();
  const ScalarField ns = ScalarField::poly(data.lp.norm_sq);
  const ScalarField w_sq = ScalarField::poly(data.w * data.w);

  WeightFields out;
  out.W1 = ScalarField::product({ScalarField::power(ns, Rational(p / 2)), ScalarField::power(w_sq, Rational(-p / 2))});
  if (data.lp_vanishes()) {
    out.W2 = ScalarField::constant(vars, 0.0);
  } else {
    out.W2 = ScalarField::product({ScalarField::power(ns, Rational((p - 4) / 2)), ScalarField::poly(data.q_at_p),
                                   ScalarField::power(w_sq, Rational((1 - p) / 2))});
  }
  return out;
}

double resolve_gamma(const HardySpec& spec, const WeightData& data) {
  if (spec.gamma) return *spec.gamma;
  if (!data.lp_vanishes())
    throw PreconditionError("gamma=optimal is only defined when L_p w vanishes; for '" + spec.label +
                            "' the L_p term survives (" + data.q_at_p.to_string() + "), sweep gamma instead");
  return optimal_gamma(spec.p);
}

double resolve_gamma(const HardySpec& spec) { return resolve_gamma(spec, weight_data(spec)); }

sym::VectorField divergence_field(const HardySpec& spec, double gamma) {
  const WeightData data = weight_data(spec);
  const Rational p = rational_from_double(spec.p);
  const auto& vars = data.w.vars();
  const ScalarField scale = ScalarField::product(
      {ScalarField::constant(vars, gamma), ScalarField::power(ScalarField::poly(data.lp.norm_sq), Rational((p - 2) / 2)),
       ScalarField::power(ScalarField::poly(data.w), Rational(1 - p))});
  sym::VectorField g;
  g.horizontal = true;
  for (const auto& gk : data.lp.gradient) g.components.push_back(scale * ScalarField::poly(specialize(gk, spec)));
  return g;
}

}  // namespace hardy::inequality
