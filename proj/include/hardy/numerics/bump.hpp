#pragma once

#include <span>
#include <string>
#include <vector>

#include "hardy/numerics/quadrature.hpp"
#include "hardy/symbolic/scalar_field.hpp"

namespace hardy::numerics {

enum class BumpKind {
  Smooth,  // exp(1 - 1/(1 - r^2)) on r < 1
  Poly,    // (1 - r^2)_+^m, m >= 2
};

std::string to_string(BumpKind kind);
BumpKind bump_kind_from_string(const std::string& name);

/// Compactly supported test function on the ellipsoid
/// r^2 = sum_i ((x_i - c_i) / rho_i)^2 < 1, equal to `amplitude` at the
/// center. Both kinds vanish together with their first derivatives on r = 1.
class TestFunction {
 public:
  TestFunction(BumpKind kind, std::vector<double> center, std::vector<double> radii,
               unsigned poly_exponent = 3, double amplitude = 1.0);

  BumpKind kind() const { return kind_; }
  const std::vector<double>& center() const { return center_; }
  const std::vector<double>& radii() const { return radii_; }
  unsigned poly_exponent() const { return m_; }
  double amplitude() const { return amplitude_; }
  std::size_t dim() const { return center_.size(); }

  double r2(std::span<const double> x) const;
  double value(std::span<const double> x) const;
  /// Writes the Euclidean gradient into grad and returns the value.
  double value_and_gradient(std::span<const double> x, std::span<double> grad) const;

  /// Bounding box of the support ellipsoid.
  BoxRegion support_box() const;
  SupportEllipsoid support() const { return {center_, radii_}; }
  TestFunction scaled(double factor) const;

 private:
  BumpKind kind_;
  std::vector<double> center_;
  std::vector<double> radii_;
  std::vector<double> inv_radii_;
  unsigned m_;
  double amplitude_;
};

/// Throws DomainError on non-positive radii or a poly exponent below 2.
TestFunction make_bump(BumpKind kind, std::vector<double> center, std::vector<double> radii,
                       unsigned poly_exponent = 3);

/// amplitude * (1 - r^2)^m as a polynomial expression over `vars` (first
/// variables are coordinates). Agrees with a Poly bump inside its support.
sym::ScalarField poly_bump_field(const TestFunction& f, const sym::VarSet& vars);

}  // namespace hardy::numerics
