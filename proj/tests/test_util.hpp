#pragma once

#include <random>
#include <string>
#include <vector>

#include "hardy/symbolic/multipoly.hpp"

namespace testutil {

using hardy::sym::MultiPoly;
using hardy::sym::Rational;
using hardy::sym::VarSet;

/// Random polynomial over the first `nvars` variables of `vars` with small
/// rational coefficients.
inline MultiPoly random_poly(std::mt19937_64& rng, const VarSet& vars, std::size_t nvars, unsigned max_degree,
                             std::size_t max_terms) {
  std::uniform_int_distribution<int> coeff(-9, 9), den(1, 5), deg(0, static_cast<int>(max_degree));
  std::uniform_int_distribution<std::size_t> nterms(0, max_terms);
  MultiPoly q(vars);
  const std::size_t count = nterms(rng);
  for (std::size_t t = 0; t < count; ++t) {
    hardy::sym::Monomial m(vars.size(), 0);
    unsigned total = 0;
    for (std::size_t v = 0; v < nvars; ++v) {
      const auto e = static_cast<unsigned>(deg(rng));
      if (total + e > max_degree) continue;
      m[v] = e;
      total += e;
    }
    q += MultiPoly::monomial(vars, m, Rational(coeff(rng), den(rng)));
  }
  return q;
}

inline std::vector<double> random_point(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> x(n);
  for (auto& v : x) v = u(rng);
  return x;
}

}  // namespace testutil
