#include "hardy/numerics/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "hardy/errors.hpp"
#include "hardy/numerics/parallel.hpp"

namespace hardy::numerics {

void BoxRegion::validate() const {
  if (lower.empty() || lower.size() != upper.size())
    throw StructuralError("box bounds must be non-empty and of equal length");
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (!std::isfinite(lower[i]) || !std::isfinite(upper[i]) || !(lower[i] < upper[i]))
      throw DomainError("box needs finite lower < upper on every axis");
}

bool BoxRegion::contains(std::span<const double> x) const {
  if (x.size() != dim()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] < lower[i] || x[i] > upper[i]) return false;
  return true;
}

void QuadratureRule::validate() const {
  if (order < 4 || order % 2 != 0) throw DomainError("quadrature order must be even and >= 4");
  if (subdivisions < 1) throw DomainError("quadrature needs at least one subdivision");
}

namespace {

/// Neumaier-compensated accumulation.
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double v) {
    const double t = sum + v;
    carry += std::fabs(sum) >= std::fabs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  double value() const { return sum + carry; }
};

GaussLegendre compute_gauss_legendre(int n) {
  using real = long double;
  GaussLegendre gl;
  gl.nodes.resize(static_cast<std::size_t>(n));
  gl.weights.resize(static_cast<std::size_t>(n));
  // P_n(x) and P_n'(x) by the three-term recurrence.
  auto legendre = [n](real x, real& dp) {
    real p0 = 1.0L, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const real pk = ((2.0L * k - 1.0L) * x * p1 - (k - 1.0L) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0L);
    return p1;
  };
  for (int i = 0; i < (n + 1) / 2; ++i) {
    real x = std::cos(std::numbers::pi_v<real> * (i + 0.75L) / (n + 0.5L));
    real dp = 0.0L;
    for (int iter = 0; iter < 100; ++iter) {
      const real dx = legendre(x, dp) / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    legendre(x, dp);
    const real w = 2.0L / ((1.0L - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    gl.nodes[lo] = static_cast<double>(-x);
    gl.nodes[hi] = static_cast<double>(x);
    gl.weights[lo] = static_cast<double>(w);
    gl.weights[hi] = static_cast<double>(w);
  }
  if (n % 2 == 1) gl.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return gl;
}

}  // namespace

const GaussLegendre& gauss_legendre(int order) {
  static std::mutex mutex;
  static std::map<int, GaussLegendre> cache;
  if (order < 1) throw DomainError("Gauss-Legendre order must be positive");
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gauss_legendre(order)).first;
  return it->second;
}

std::vector<double> integrate_fixed(const BoxRegion& region, int order, int subdivisions,
                                    std::size_t ncomp, const PointIntegrand& integrand,
                                    const SupportEllipsoid* support) {
  region.validate();
  if (order < 1 || subdivisions < 1) throw DomainError("invalid quadrature parameters");
  const std::size_t dim = region.dim();
  const GaussLegendre& gl = gauss_legendre(order);
  const auto sub = static_cast<std::size_t>(subdivisions);
  const auto npts = static_cast<std::size_t>(order);

  std::size_t cells = 1;
  for (std::size_t a = 0; a < dim; ++a) cells *= sub;

  if (support && (support->center.size() != dim || support->radii.size() != dim))
    throw StructuralError("support ellipsoid dimension does not match the region");

  std::vector<double> h(dim);
  for (std::size_t a = 0; a < dim; ++a) h[a] = (region.upper[a] - region.lower[a]) / subdivisions;

  std::vector<std::vector<double>> cell_sums(cells, std::vector<double>(ncomp, 0.0));
  parallel_for(cells, [&](std::size_t cell) {
    // Axis coordinates and weights of this cell.
    std::vector<std::vector<double>> xs(dim, std::vector<double>(npts));
    std::vector<std::vector<double>> ws(dim, std::vector<double>(npts));
    std::vector<std::vector<double>> t2(dim, std::vector<double>(npts, 0.0));
    std::size_t rem = cell;
    for (std::size_t a = 0; a < dim; ++a) {
      const std::size_t ci = rem % sub;
      rem /= sub;
      const double lo = region.lower[a] + static_cast<double>(ci) * h[a];
      for (std::size_t i = 0; i < npts; ++i) {
        xs[a][i] = lo + 0.5 * h[a] * (gl.nodes[i] + 1.0);
        ws[a][i] = 0.5 * h[a] * gl.weights[i];
        if (support) {
          const double t = (xs[a][i] - support->center[a]) / support->radii[a];
          t2[a][i] = t * t;
        }
      }
    }
    if (support) {
      double min_r2 = 0.0;
      for (std::size_t a = 0; a < dim; ++a) min_r2 += *std::min_element(t2[a].begin(), t2[a].end());
      if (min_r2 >= 1.0) return;
    }
    std::vector<std::size_t> idx(dim, 0);
    std::vector<double> x(dim), out(ncomp), line(ncomp);
    std::vector<CompensatedSum> sums(ncomp);
    const std::size_t last = dim - 1;
    for (;;) {
      // One line along the last axis with the leading coordinates fixed.
      double r2_prefix = 0.0, w_prefix = 1.0;
      for (std::size_t a = 0; a < last; ++a) {
        x[a] = xs[a][idx[a]];
        w_prefix *= ws[a][idx[a]];
        r2_prefix += t2[a][idx[a]];
      }
      if (r2_prefix < 1.0 || !support) {
        std::fill(line.begin(), line.end(), 0.0);
        for (std::size_t i = 0; i < npts; ++i) {
          if (support && r2_prefix + t2[last][i] >= 1.0) continue;
          x[last] = xs[last][i];
          integrand(x, out);
          const double w = ws[last][i];
          for (std::size_t c = 0; c < ncomp; ++c) {
            if (!std::isfinite(out[c])) {
              std::ostringstream os;
              os << "non-finite integrand sample at (";
              for (std::size_t k = 0; k < dim; ++k) os << (k ? ", " : "") << x[k];
              os << ")";
              throw NumericError(os.str());
            }
            line[c] += w * out[c];
          }
        }
        for (std::size_t c = 0; c < ncomp; ++c) sums[c].add(w_prefix * line[c]);
      }
      std::size_t a = last;
      for (;;) {
        if (a == 0) {
          for (std::size_t c = 0; c < ncomp; ++c) cell_sums[cell][c] = sums[c].value();
          return;
        }
        --a;
        if (++idx[a] < npts) break;
        idx[a] = 0;
      }
    }
  });

  std::vector<CompensatedSum> acc(ncomp);
  for (const auto& s : cell_sums)
    for (std::size_t c = 0; c < ncomp; ++c) acc[c].add(s[c]);
  std::vector<double> total(ncomp);
  for (std::size_t c = 0; c < ncomp; ++c) total[c] = acc[c].value();
  return total;
}

std::vector<QuadratureResult> integrate_components(const BoxRegion& region, const QuadratureRule& rule,
                                                   std::size_t ncomp, const PointIntegrand& integrand,
                                                   const SupportEllipsoid* support) {
  rule.validate();
  const auto fine = integrate_fixed(region, rule.order, rule.subdivisions, ncomp, integrand, support);
  const auto coarse = integrate_fixed(region, rule.order / 2, rule.subdivisions, ncomp, integrand, support);
  std::vector<QuadratureResult> out(ncomp);
  for (std::size_t c = 0; c < ncomp; ++c) out[c] = {fine[c], std::fabs(fine[c] - coarse[c])};
  return out;
}

QuadratureResult integrate(const sym::ScalarField& field, const BoxRegion& region,
                           const QuadratureRule& rule) {
  region.validate();
  const auto& vars = field.vars();
  const std::size_t dim = region.dim();
  if (vars.size() < dim) throw StructuralError("integrate: field ring smaller than region");
  for (std::size_t v = dim; v < vars.size(); ++v)
    if (field.depends_on(v))
      throw StructuralError("integrate: field depends on non-coordinate '" + vars.name(v) + "'");
  const std::size_t arity = vars.size();
  auto integrand = [&](std::span<const double> x, std::span<double> out) {
    thread_local std::vector<double> values;
    values.assign(arity, 0.0);
    std::copy(x.begin(), x.end(), values.begin());
    try {
      out[0] = field.evaluate(values);
    } catch (const DomainError& e) {
      std::ostringstream os;
      os << "integrand undefined at (";
      for (std::size_t k = 0; k < dim; ++k) os << (k ? ", " : "") << x[k];
      os << "): " << e.what();
      throw NumericError(os.str());
    }
  };
  return integrate_components(region, rule, 1, integrand).front();
}

}  // namespace hardy::numerics
