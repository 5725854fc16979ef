#include "hardy/groups/starshaped.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "hardy/errors.hpp"
#include "hardy/numerics/parallel.hpp"
#include "hardy/symbolic/horner.hpp"

namespace hardy::groups {

std::string to_string(StarshapedVerdict v) {
  switch (v) {
    case StarshapedVerdict::StrictlyStarshaped:
      return "strictly_starshaped";
    case StarshapedVerdict::Starshaped:
      return "starshaped";
    case StarshapedVerdict::Violated:
      return "violated";
  }
  return "unknown";
}

namespace {

struct BoundarySample {
  std::vector<double> x;
  double value = 0.0;  // <Z(x), n(x)>
};

struct Levelset {
  std::size_t dim;
  std::size_t arity;
  sym::HornerPoly phi;
  std::vector<sym::HornerPoly> grad;

  double value(const std::vector<double>& x) const {
    std::vector<double> v(arity, 0.0);
    std::copy(x.begin(), x.end(), v.begin());
    return phi(v);
  }
};

// Marches outward along the ray and returns every sign change of phi,
// refined by bisection. Bounds double up to 2^10 before giving up.
std::vector<double> ray_roots(const Levelset& ls, const std::vector<double>& dir, double tol) {
  auto at = [&](double t) {
    std::vector<double> x(ls.dim);
    for (std::size_t i = 0; i < ls.dim; ++i) x[i] = t * dir[i];
    return ls.value(x);
  };
  constexpr int kSteps = 256;
  std::vector<double> roots;
  double t_lo = 0.0;
  for (double t_max = 1.0; t_max <= 1024.0 && roots.empty(); t_max *= 2.0) {
    const double h = (t_max - t_lo) / kSteps;
    double a = t_lo + h * 1e-3, fa = at(a);
    for (int s = 1; s <= kSteps; ++s) {
      double b = t_lo + s * h;
      double fb = at(b);
      if (std::fabs(fb) < tol) {
        roots.push_back(b);
      } else if ((fa < 0) != (fb < 0) && std::fabs(fa) >= tol) {
        double lo = a, hi = b, flo = fa;
        for (int it = 0; it < 200; ++it) {
          double mid = 0.5 * (lo + hi);
          double fm = at(mid);
          if (std::fabs(fm) < tol || hi - lo < 1e-15 * std::max(1.0, hi)) {
            lo = hi = mid;
            break;
          }
          if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        roots.push_back(0.5 * (lo + hi));
      }
      a = b;
      fa = fb;
    }
    t_lo = t_max;
  }
  return roots;
}

std::string format_point(const std::vector<double>& x) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
  os << ")";
  return os.str();
}

}  // namespace

StarshapedResult starshaped_check(const StratifiedDescriptor& desc, const MultiPoly& levelset,
                                  const StarshapedOptions& options) {
  desc.validate();
  const std::size_t dim = desc.dim();
  const auto& vars = levelset.vars();
  if (vars.size() < dim) throw StructuralError("levelset ring smaller than group dimension");
  for (std::size_t v = dim; v < vars.size(); ++v)
    if (levelset.depends_on(v))
      throw StructuralError("levelset depends on non-coordinate symbol '" + vars.name(v) + "'");
  if (options.samples == 0) throw SamplingError("need at least one ray");

  Levelset ls{dim, vars.size(), sym::HornerPoly(levelset), {}};
  for (std::size_t i = 0; i < dim; ++i) ls.grad.emplace_back(levelset.partial(i));

  auto sample_at = [&](const std::vector<double>& x) {
    std::vector<double> v(vars.size(), 0.0);
    std::copy(x.begin(), x.end(), v.begin());
    double norm2 = 0.0, zn = 0.0;
    std::vector<double> g(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      g[i] = ls.grad[i](v);
      norm2 += g[i] * g[i];
    }
    const double norm = std::sqrt(norm2);
    if (!(norm > 1e-12)) throw DegenerateBoundaryError("gradient of levelset vanishes at " + format_point(x));
    for (std::size_t i = 0; i < dim; ++i) zn += desc.weights[i] * x[i] * g[i] / norm;
    return BoundarySample{x, zn};
  };

  // One deterministic stream per ray so results do not depend on threading.
  std::vector<std::vector<BoundarySample>> per_ray(options.samples);
  numerics::parallel_for(options.samples, [&](std::size_t r) {
    std::mt19937_64 rng(options.seed * 0x9E3779B97F4A7C15ULL + r);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> dir(dim);
    double len = 0.0;
    while (len < 1e-12) {
      len = 0.0;
      for (auto& c : dir) {
        c = normal(rng);
        len += c * c;
      }
      len = std::sqrt(len);
    }
    for (auto& c : dir) c /= len;
    for (double t : ray_roots(ls, dir, options.root_tolerance)) {
      std::vector<double> x(dim);
      for (std::size_t i = 0; i < dim; ++i) x[i] = t * dir[i];
      per_ray[r].push_back(sample_at(x));
    }
  });

  std::vector<BoundarySample> samples;
  const std::vector<double> origin(dim, 0.0);
  if (std::fabs(ls.value(origin)) < options.root_tolerance) samples.push_back(sample_at(origin));
  for (auto& r : per_ray)
    for (auto& s : r) samples.push_back(std::move(s));
  if (samples.empty())
    throw SamplingError("no sampled ray from the origin meets the boundary");

  StarshapedResult result;
  result.boundary_points = samples.size();
  result.min_value = std::numeric_limits<double>::infinity();
  for (const auto& s : samples)
    if (s.value < result.min_value) {
      result.min_value = s.value;
      result.witness = s.x;
    }
  if (result.min_value > options.strict_threshold)
    result.verdict = StarshapedVerdict::StrictlyStarshaped;
  else if (result.min_value >= -options.strict_threshold)
    result.verdict = StarshapedVerdict::Starshaped;
  else
    result.verdict = StarshapedVerdict::Violated;
  return result;
}

}  // namespace hardy::groups
