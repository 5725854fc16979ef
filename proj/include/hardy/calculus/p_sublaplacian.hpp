#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hardy/calculus/horizontal.hpp"

namespace hardy::calculus {

/// L_p w = |grad_X w|^(p-4) * q_poly wherever norm_sq > 0, with
///   q_poly = norm_sq * sum_k X_k g_k + (p-2)/2 * sum_k g_k X_k(norm_sq),
/// g_k = X_k w. q_poly is affine in the ring symbol "p".
struct FactoredLp {
  std::vector<MultiPoly> gradient;
  MultiPoly norm_sq;
  MultiPoly q_poly;

  /// q_poly == 0 certifies L_p w == 0 for every p.
  bool vanishes() const { return q_poly.is_zero(); }
  /// Evaluates norm_sq^((p-4)/2) * q_poly; `values` indexed by the ring,
  /// including the value of p.
  double evaluate(std::span<const double> values) const;
};

FactoredLp p_sublaplacian_factored(const Frame& frame, const MultiPoly& w);

/// L_p w as an expression tree with the exponent (p-2)/2 kept symbolic.
ScalarField p_sublaplacian_field(const Frame& frame, const ScalarField& w);

/// L_p w at a coordinate point by exact tree differentiation followed by
/// evaluation. `params` binds the remaining symbols (n_i, d); p is bound
/// from the argument. Throws DomainError when the horizontal gradient
/// vanishes and p < 2.
double p_sublaplacian_numeric(const Frame& frame, const ScalarField& w, double p,
                              std::span<const double> point,
                              const std::map<std::string, double>& params = {});

/// Builds g = gamma |grad_X w|^(p-2) grad_X w / w^(p-1), differentiates it
/// numerically through the expression layer and compares div_X g with
///   gamma L_p w / w^(p-1) - gamma (p-1) |grad_X w|^p / w^p.
/// w may only depend on coordinates. Returns the largest absolute residual.
/// Throws PreconditionError at points with w <= 0 or vanishing gradient.
double divergence_identity_check(const Frame& frame, const MultiPoly& w, double p, double gamma,
                                 const std::vector<std::vector<double>>& points);

}  // namespace hardy::calculus
