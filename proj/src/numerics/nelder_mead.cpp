#include "hardy/numerics/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hardy/errors.hpp"

namespace hardy::numerics {

NelderMeadResult nelder_mead(const std::function<double(std::span<const double>)>& objective,
                             std::vector<double> start, std::vector<double> steps,
                             const NelderMeadOptions& options) {
  const std::size_t n = start.size();
  if (steps.size() != n) throw StructuralError("nelder_mead: step vector length mismatch");

  NelderMeadResult result;
  if (n == 0) {
    result.value = objective(start);
    result.x = std::move(start);
    result.converged = true;
    result.trace.push_back(result.value);
    return result;
  }

  std::vector<std::vector<double>> simplex(n + 1, start);
  for (std::size_t i = 0; i < n; ++i) simplex[i + 1][i] += steps[i];
  std::vector<double> values(n + 1);
  for (std::size_t i = 0; i <= n; ++i) values[i] = objective(simplex[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  auto blend = [&](double t, const std::vector<double>& from, std::vector<double>& out) {
    // out = centroid + t * (centroid - from)
    for (std::size_t j = 0; j < n; ++j) out[j] = centroid[j] + t * (centroid[j] - from[j]);
  };

  for (result.iterations = 0; result.iterations < options.max_iter; ++result.iterations) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return values[a] < values[b]; });
    const std::size_t best = order.front(), worst = order.back(), second = order[n - 1];

    if (values[worst] - values[best] <= options.tol * std::max(1.0, std::fabs(values[best]))) {
      result.converged = true;
      break;
    }

    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i <= n; ++i)
      if (i != worst)
        for (std::size_t j = 0; j < n; ++j) centroid[j] += simplex[i][j] / static_cast<double>(n);

    blend(1.0, simplex[worst], trial);
    const double fr = objective(trial);
    if (fr < values[best]) {
      blend(2.0, simplex[worst], trial2);
      const double fe = objective(trial2);
      if (fe < fr) {
        simplex[worst] = trial2;
        values[worst] = fe;
      } else {
        simplex[worst] = trial;
        values[worst] = fr;
      }
    } else if (fr < values[second]) {
      simplex[worst] = trial;
      values[worst] = fr;
    } else {
      const bool outside = fr < values[worst];
      blend(outside ? 0.5 : -0.5, simplex[worst], trial2);
      const double fc = objective(trial2);
      if (fc < (outside ? fr : values[worst])) {
        simplex[worst] = trial2;
        values[worst] = fc;
      } else {
        for (std::size_t i = 0; i <= n; ++i) {
          if (i == best) continue;
          for (std::size_t j = 0; j < n; ++j)
            simplex[i][j] = simplex[best][j] + 0.5 * (simplex[i][j] - simplex[best][j]);
          values[i] = objective(simplex[i]);
        }
      }
    }
    result.trace.push_back(*std::min_element(values.begin(), values.end()));
  }

  const auto best = static_cast<std::size_t>(
      std::distance(values.begin(), std::min_element(values.begin(), values.end())));
  result.x = simplex[best];
  result.value = values[best];
  return result;
}

}  // namespace hardy::numerics
