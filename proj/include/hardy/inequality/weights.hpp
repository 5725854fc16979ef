#pragma once

#include "hardy/calculus/p_sublaplacian.hpp"
#include "hardy/inequality/hardy_spec.hpp"
#include "hardy/symbolic/scalar_field.hpp"

namespace hardy::inequality {

using sym::ScalarField;

/// Weight function of a spec together with its factored L_p data, all with
/// n and d substituted. lp.q_poly still carries the symbol p.
struct WeightData {
  MultiPoly w;
  calculus::FactoredLp lp;
  /// q_poly at the spec's p.
  MultiPoly q_at_p;

  bool lp_vanishes() const { return q_at_p.is_zero(); }
};

WeightData weight_data(const HardySpec& spec);

struct WeightFields {
  ScalarField W1;  // |grad_X w|^p / |w|^p
  ScalarField W2;  // L_p w / |w|^(p-1), the zero constant when L_p w == 0
};

/// Exponents use the exact rational value of spec.p.
WeightFields weight_fields(const HardySpec& spec);
WeightFields weight_fields(const HardySpec& spec, const WeightData& data);

/// gamma of the spec, resolving "optimal" to optimal_gamma(p). Throws
/// PreconditionError for "optimal" when L_p w does not vanish.
double resolve_gamma(const HardySpec& spec, const WeightData& data);
double resolve_gamma(const HardySpec& spec);

/// g = gamma |grad_X w|^(p-2) grad_X w / w^(p-1) as a horizontal field.
sym::VectorField divergence_field(const HardySpec& spec, double gamma);

}  // namespace hardy::inequality
