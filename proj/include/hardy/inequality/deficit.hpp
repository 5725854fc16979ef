#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hardy/inequality/weights.hpp"
#include "hardy/numerics/bump.hpp"
#include "hardy/numerics/quadrature.hpp"

namespace hardy::inequality {

using numerics::QuadratureResult;
using numerics::QuadratureRule;
using numerics::TestFunction;

inline constexpr double kAdmissibilityMargin = 1e-6;
inline constexpr double kDeficitBudgetFactor = 10.0;

/// Minimum of the spec's weight over the closed support ellipsoid of f, in
/// closed form. Requires the weight to be affine in x.
double min_weight_on_support(const HardySpec& spec, const TestFunction& f);
/// Support of f lies in {w > margin}.
bool admissible(const TestFunction& f, const HardySpec& spec, double margin = kAdmissibilityMargin);

struct FunctionParams {
  std::string kind;
  std::vector<double> center;
  std::vector<double> radii;
  unsigned m = 3;

  static FunctionParams of(const TestFunction& f);
};

struct HardyReport {
  double lhs = 0.0;
  double rhs_gradient_term = 0.0;
  double rhs_lp_term = 0.0;
  double deficit = 0.0;
  double gamma = 0.0;
  double p = 2.0;
  double quad_error = 0.0;
  std::string group;
  std::string label;
  WeightMode mode = WeightMode::HalfSpace;
  std::vector<double> n;
  std::optional<double> d;
  FunctionParams f_params;

  double rhs_total() const { return rhs_gradient_term + rhs_lp_term; }
  /// deficit >= -factor * quad_error.
  bool holds(double factor = kDeficitBudgetFactor) const { return deficit >= -factor * quad_error; }
};

/// Integrals of |grad_X f|^p, W1 |f|^p and W2 |f|^p for one p.
struct HardyIntegrals {
  double p = 2.0;
  QuadratureResult lhs;
  QuadratureResult w1;
  QuadratureResult w2;
};

/// One quadrature pass over the support box of f for all exponents in ps
/// at once. The spec's own p and gamma are ignored. Throws
/// PreconditionError if f is not admissible.
std::vector<HardyIntegrals> hardy_integrals(const HardySpec& spec, const TestFunction& f,
                                            const std::vector<double>& ps, const QuadratureRule& rule = {});

/// Combines integrals into a report for the given gamma.
HardyReport assemble_report(const HardySpec& spec, const TestFunction& f, const HardyIntegrals& integrals,
                            double gamma);

/// Both sides of the Hardy inequality for spec and f.
HardyReport evaluate_deficit(const HardySpec& spec, const TestFunction& f, const QuadratureRule& rule = {});

/// Reports for every (p, gamma) pair, p-major. An empty gamma means
/// "optimal" and follows resolve_gamma.
std::vector<HardyReport> evaluate_deficits(const HardySpec& spec, const TestFunction& f,
                                           const std::vector<double>& ps,
                                           const std::vector<std::optional<double>>& gammas,
                                           const QuadratureRule& rule = {});

struct DivergenceBound {
  double lhs = 0.0;
  double rhs = 0.0;
  double deficit = 0.0;
  double quad_error = 0.0;
};

/// lhs = int |grad_X f|^p, rhs = int (div_X g - (p-1)|g|^(p/(p-1))) |f|^p
/// for a horizontal field g depending only on the coordinates.
DivergenceBound general_divergence_bound(const Frame& frame, const sym::VectorField& g, const TestFunction& f,
                                         double p, const QuadratureRule& rule = {});

}  // namespace hardy::inequality
