#include "hardy/calculus/horizontal.hpp"

#include "hardy/errors.hpp"

namespace hardy::calculus {

std::vector<MultiPoly> horizontal_gradient(const Frame& frame, const MultiPoly& w) {
  if (w.vars() != frame.vars()) throw StructuralError("horizontal_gradient: variable mismatch");
  std::vector<MultiPoly> g;
  g.reserve(frame.dim_N());
  for (std::size_t k = 0; k < frame.dim_N(); ++k) g.push_back(frame.apply(k, w));
  return g;
}

MultiPoly horizontal_divergence(const Frame& frame, std::span<const MultiPoly> F) {
  if (F.size() != frame.dim_N()) throw StructuralError("horizontal_divergence: arity mismatch");
  MultiPoly out(frame.vars());
  for (std::size_t k = 0; k < F.size(); ++k) out += frame.apply(k, F[k]);
  return out;
}

ScalarField apply_field(const Frame& frame, std::size_t k, const ScalarField& f) {
  if (f.vars() != frame.vars()) throw StructuralError("apply_field: variable mismatch");
  std::vector<ScalarField> terms;
  for (std::size_t j = 0; j < frame.dim_n(); ++j) {
    const auto& c = frame.coefficient(k, j);
    if (c.is_zero() || !f.depends_on(j)) continue;
    terms.push_back(ScalarField::poly(c) * f.differentiate(j));
  }
  if (terms.empty()) return ScalarField::poly(MultiPoly(frame.vars()));
  return ScalarField::sum(std::move(terms));
}

VectorField horizontal_gradient(const Frame& frame, const ScalarField& w) {
  VectorField g;
  g.horizontal = true;
  for (std::size_t k = 0; k < frame.dim_N(); ++k) g.components.push_back(apply_field(frame, k, w));
  return g;
}

ScalarField horizontal_divergence(const Frame& frame, const VectorField& F) {
  if (F.size() != frame.dim_N()) throw StructuralError("horizontal_divergence: arity mismatch");
  std::vector<ScalarField> terms;
  for (std::size_t k = 0; k < F.size(); ++k) terms.push_back(apply_field(frame, k, F[k]));
  return ScalarField::sum(std::move(terms));
}

}  // namespace hardy::calculus
