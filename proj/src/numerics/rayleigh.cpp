#include "hardy/numerics/rayleigh.hpp"

#include <cmath>
#include <random>

#include "hardy/errors.hpp"

namespace hardy::numerics {

using inequality::admissible;
using inequality::min_weight_on_support;

double rayleigh_quotient(const HardySpec& spec, const TestFunction& f, const QuadratureRule& rule) {
  const auto data = inequality::weight_data(spec);
  if (!data.lp_vanishes())
    throw PreconditionError("Rayleigh quotient needs L_p w == 0; '" + spec.label + "' keeps " +
                            data.q_at_p.to_string());
  const auto I = inequality::hardy_integrals(spec, f, {spec.p}, rule).front();
  if (!(I.w1.value > 0.0)) throw NumericError("weighted integral vanished in the Rayleigh quotient");
  return I.lhs.value / I.w1.value;
}

BumpFamily fixed_family(const TestFunction& f) {
  return {"fixed", [f](std::span<const double>) { return f; }, {}, {}};
}

namespace {

struct AffineWeight {
  std::vector<double> a;
  double c = 0.0;  // w(x) = a . x + c
};

AffineWeight affine_weight(const HardySpec& spec) {
  const auto w = inequality::weight_function(spec);
  if (w.total_degree() > 1) throw StructuralError("bump families need an affine weight");
  AffineWeight out;
  out.c = sym::to_double(w.constant_term());
  for (std::size_t i = 0; i < spec.frame.dim_n(); ++i) out.a.push_back(sym::to_double(w.partial(i).constant_term()));
  return out;
}

}  // namespace

BumpFamily half_space_family(const HardySpec& spec, BumpKind kind, unsigned m) {
  spec.validate();
  const AffineWeight aw = affine_weight(spec);
  const std::size_t n = aw.a.size();
  std::size_t axis = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (std::fabs(aw.a[i]) > std::fabs(aw.a[axis])) axis = i;
  const double a_axis = aw.a[axis];

  BumpFamily fam;
  fam.name = "half_space";
  fam.make = [aw, axis, a_axis, n, kind, m](std::span<const double> t) {
    const double h = std::exp(t[0]);
    const double frac = 1.0 / (1.0 + std::exp(-t[1]));
    const double tangential = std::exp(t[2]);
    std::vector<double> center(n, 0.0), radii(n, tangential);
    // w(center) = h with the center on the chosen axis.
    center[axis] = (h - aw.c) / a_axis;
    radii[axis] = h * frac / std::fabs(a_axis);
    return TestFunction(kind, center, radii, m);
  };
  fam.start = {0.0, 1.0, 0.0};
  fam.steps = {0.5, 1.0, 0.5};
  return fam;
}

RayleighResult minimize_quotient(const HardySpec& spec, const BumpFamily& family, const NelderMeadOptions& options,
                                 const QuadratureRule& rule) {
  auto objective = [&](std::span<const double> t) {
    const TestFunction f = family.make(t);
    const double margin = min_weight_on_support(spec, f);
    if (!(margin > inequality::kAdmissibilityMargin))
      return kInadmissiblePenalty + (inequality::kAdmissibilityMargin - margin);
    return rayleigh_quotient(spec, f, rule);
  };
  const auto nm = nelder_mead(objective, family.start, family.steps, options);
  RayleighResult out;
  out.best_params = nm.x;
  out.quotient = nm.value;
  out.iterations = nm.iterations;
  out.converged = nm.converged;
  out.trace = nm.trace;
  return out;
}

std::vector<TestFunction> random_admissible_bumps(const HardySpec& spec, std::size_t count, std::uint64_t seed,
                                                  BumpKind kind, unsigned m) {
  const AffineWeight aw = affine_weight(spec);
  const std::size_t n = aw.a.size();
  double a2 = 0.0;
  for (double v : aw.a) a2 += v * v;
  if (!(a2 > 0.0)) throw DomainError("weight has no linear part");
  std::vector<double> x0(n);
  for (std::size_t i = 0; i < n; ++i) x0[i] = (1.0 - aw.c) * aw.a[i] / a2;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> offset(-0.5, 0.5), radius(0.1, 0.4);
  std::vector<TestFunction> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 10000 * (count + 1)) throw SamplingError("could not draw admissible bumps");
    std::vector<double> c(n), r(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = x0[i] + offset(rng);
    for (std::size_t i = 0; i < n; ++i) r[i] = radius(rng);
    TestFunction f(kind, c, r, m);
    if (admissible(f, spec)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace hardy::numerics
