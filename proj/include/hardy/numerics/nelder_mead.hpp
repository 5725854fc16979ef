#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace hardy::numerics {

struct NelderMeadOptions {
  std::size_t max_iter = 500;
  double tol = 1e-6;  // on the spread of simplex values
};

struct NelderMeadResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  std::vector<double> trace;  // best value after each iteration
};

/// Downhill simplex with the standard coefficients (reflection 1,
/// expansion 2, contraction 1/2, shrink 1/2). Converged once
/// max f - min f <= tol * max(1, |min f|). A zero-dimensional problem
/// evaluates once and reports convergence.
NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> start, std::vector<double> steps,
                             const NelderMeadOptions& options = {});

}  // namespace hardy::numerics
