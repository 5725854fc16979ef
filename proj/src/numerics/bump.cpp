#include "hardy/numerics/bump.hpp"

#include <cmath>

#include "hardy/errors.hpp"

namespace hardy::numerics {

std::string to_string(BumpKind kind) { return kind == BumpKind::Smooth ? "smooth_bump" : "poly_bump"; }

BumpKind bump_kind_from_string(const std::string& name) {
  if (name == "smooth" || name == "smooth_bump") return BumpKind::Smooth;
  if (name == "poly" || name == "poly_bump") return BumpKind::Poly;
  throw ParseError("unknown bump kind '" + name + "'");
}

TestFunction::TestFunction(BumpKind kind, std::vector<double> center, std::vector<double> radii,
                           unsigned poly_exponent, double amplitude)
    : kind_(kind), center_(std::move(center)), radii_(std::move(radii)), m_(poly_exponent), amplitude_(amplitude) {
  if (center_.empty() || center_.size() != radii_.size())
    throw StructuralError("bump center and radii must have the same non-zero length");
  for (double r : radii_)
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("bump radii must be positive");
  for (double c : center_)
    if (!std::isfinite(c)) throw DomainError("bump center must be finite");
  if (kind_ == BumpKind::Poly && m_ < 2) throw DomainError("poly_bump needs m >= 2 to be C^1");
  for (double r : radii_) inv_radii_.push_back(1.0 / r);
}

double TestFunction::r2(std::span<const double> x) const {
  double s = 0.0;
  for (std::size_t i = 0; i < center_.size(); ++i) {
    const double t = (x[i] - center_[i]) * inv_radii_[i];
    s += t * t;
  }
  return s;
}

double TestFunction::value(std::span<const double> x) const {
  const double s = r2(x);
  if (s >= 1.0) return 0.0;
  const double u = 1.0 - s;
  if (kind_ == BumpKind::Smooth) return amplitude_ * std::exp(1.0 - 1.0 / u);
  return amplitude_ * std::pow(u, static_cast<double>(m_));
}

double TestFunction::value_and_gradient(std::span<const double> x, std::span<double> grad) const {
  const double s = r2(x);
  if (s >= 1.0) {
    for (auto& g : grad) g = 0.0;
    return 0.0;
  }
  const double u = 1.0 - s;
  double v, dv_ds;  // f as a function of s = r^2
  if (kind_ == BumpKind::Smooth) {
    v = amplitude_ * std::exp(1.0 - 1.0 / u);
    dv_ds = -v / (u * u);
  } else {
    const double um1 = std::pow(u, static_cast<double>(m_ - 1));
    v = amplitude_ * um1 * u;
    dv_ds = -amplitude_ * m_ * um1;
  }
  for (std::size_t i = 0; i < center_.size(); ++i)
    grad[i] = dv_ds * 2.0 * (x[i] - center_[i]) * inv_radii_[i] * inv_radii_[i];
  return v;
}

BoxRegion TestFunction::support_box() const {
  BoxRegion box;
  for (std::size_t i = 0; i < center_.size(); ++i) {
    box.lower.push_back(center_[i] - radii_[i]);
    box.upper.push_back(center_[i] + radii_[i]);
  }
  return box;
}

TestFunction TestFunction::scaled(double factor) const {
  return TestFunction(kind_, center_, radii_, m_, amplitude_ * factor);
}

TestFunction make_bump(BumpKind kind, std::vector<double> center, std::vector<double> radii,
                       unsigned poly_exponent) {
  return TestFunction(kind, std::move(center), std::move(radii), poly_exponent);
}

sym::ScalarField poly_bump_field(const TestFunction& f, const sym::VarSet& vars) {
  using sym::MultiPoly;
  using sym::Rational;
  if (f.kind() != BumpKind::Poly) throw StructuralError("poly_bump_field needs a poly bump");
  if (vars.size() < f.dim()) throw StructuralError("poly_bump_field: ring too small");
  MultiPoly u = MultiPoly::constant(vars, Rational(1));
  for (std::size_t i = 0; i < f.dim(); ++i) {
    MultiPoly t = (MultiPoly::variable(vars, i) - MultiPoly::constant(vars, sym::rational_from_double(f.center()[i]))) *
                  Rational(1 / sym::rational_from_double(f.radii()[i]));
    u -= t * t;
  }
  return sym::ScalarField::poly(u.pow(f.poly_exponent()) * sym::rational_from_double(f.amplitude()));
}

}  // namespace hardy::numerics
