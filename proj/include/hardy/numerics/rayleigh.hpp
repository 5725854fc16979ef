#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hardy/inequality/deficit.hpp"
#include "hardy/numerics/bump.hpp"
#include "hardy/numerics/nelder_mead.hpp"

namespace hardy::numerics {

using inequality::HardySpec;

/// int |grad_X f|^p / int W1 |f|^p. Throws PreconditionError if f is not
/// admissible or the spec keeps an L_p term.
double rayleigh_quotient(const HardySpec& spec, const TestFunction& f, const QuadratureRule& rule = {});

/// Parameter vector -> bump. Parameters outside the admissible set are
/// allowed; the optimizer penalizes them.
struct BumpFamily {
  std::string name;
  std::function<TestFunction(std::span<const double>)> make;
  std::vector<double> start;
  std::vector<double> steps;
};

/// A family without parameters.
BumpFamily fixed_family(const TestFunction& f);

/// Bumps centered at distance h = exp(t0) from the boundary along the
/// coordinate axis carrying the largest normal component, with radius
/// h * logistic(t1) along that axis and exp(t2) in every other axis.
/// Requires an affine weight.
BumpFamily half_space_family(const HardySpec& spec, BumpKind kind = BumpKind::Smooth, unsigned m = 3);

struct RayleighResult {
  std::vector<double> best_params;
  double quotient = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> trace;  // best quotient per iteration
};

inline constexpr double kInadmissiblePenalty = 1e6;

/// Nelder-Mead over the family. Inadmissible parameters evaluate to
/// kInadmissiblePenalty plus the violation.
RayleighResult minimize_quotient(const HardySpec& spec, const BumpFamily& family,
                                 const NelderMeadOptions& options = {}, const QuadratureRule& rule = {});

/// Seeded draws: centers uniform in a unit cube around the point where the
/// weight equals 1, radii uniform in [0.1, 0.4], inadmissible draws
/// rejected. Throws SamplingError after too many rejections.
std::vector<TestFunction> random_admissible_bumps(const HardySpec& spec, std::size_t count, std::uint64_t seed,
                                                  BumpKind kind = BumpKind::Smooth, unsigned m = 3);

}  // namespace hardy::numerics
