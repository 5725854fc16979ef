#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hardy/symbolic/scalar_field.hpp"

namespace hardy::numerics {

struct BoxRegion {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t dim() const { return lower.size(); }
  /// lower < upper componentwise, equal lengths, finite.
  void validate() const;
  bool contains(std::span<const double> x) const;
};

/// Tensor-product Gauss-Legendre with `order` points per axis on each of
/// `subdivisions` equal cells per axis. The error estimate compares the
/// result against the same rule at order / 2.
struct QuadratureRule {
  int order = 24;
  int subdivisions = 4;

  void validate() const;  // order >= 4 and even, subdivisions >= 1
  QuadratureRule doubled() const { return {order * 2, subdivisions}; }
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Nodes and weights on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int order);

/// Ellipsoid sum_i ((x_i - c_i) / r_i)^2 < 1 outside of which an integrand
/// is identically zero. Nodes outside it are skipped, not sampled.
struct SupportEllipsoid {
  std::vector<double> center;
  std::vector<double> radii;
};

/// Fills out[0..ncomp) with integrand values at x.
using PointIntegrand = std::function<void(std::span<const double> x, std::span<double> out)>;

/// Single pass of the tensor rule, no error estimate. Cells may run in
/// parallel; partial sums are combined in cell-index order. Throws
/// NumericError naming the point if any sample is not finite.
std::vector<double> integrate_fixed(const BoxRegion& region, int order, int subdivisions,
                                    std::size_t ncomp, const PointIntegrand& integrand,
                                    const SupportEllipsoid* support = nullptr);

/// Vector-valued integration with order-halving error estimates.
std::vector<QuadratureResult> integrate_components(const BoxRegion& region, const QuadratureRule& rule,
                                                   std::size_t ncomp, const PointIntegrand& integrand,
                                                   const SupportEllipsoid* support = nullptr);

/// Integrates a field whose free symbols are the first region.dim()
/// variables of its ring (the coordinates).
QuadratureResult integrate(const sym::ScalarField& field, const BoxRegion& region,
                           const QuadratureRule& rule = {});

}  // namespace hardy::numerics
