#include "hardy/groups/brackets.hpp"

#include <Eigen/Dense>
#include <algorithm>

#include "hardy/errors.hpp"

namespace hardy::groups {

using sym::Rational;

PolyVectorField lie_bracket(const PolyVectorField& a, const PolyVectorField& b, std::size_t dim) {
  if (a.size() != dim || b.size() != dim) throw StructuralError("lie_bracket: arity mismatch");
  PolyVectorField out;
  out.reserve(dim);
  for (std::size_t m = 0; m < dim; ++m) {
    MultiPoly c(a[m].vars());
    for (std::size_t l = 0; l < dim; ++l) {
      if (!a[l].is_zero()) c += a[l] * b[m].partial(l);
      if (!b[l].is_zero()) c -= b[l] * a[m].partial(l);
    }
    out.push_back(std::move(c));
  }
  return out;
}

PolyVectorField commutator(const Frame& frame, std::size_t i, std::size_t j) {
  if (i >= frame.dim_N() || j >= frame.dim_N())
    throw StructuralError("commutator: field index out of range");
  return lie_bracket(frame.field(i), frame.field(j), frame.dim_n());
}

std::vector<PolyVectorField> iterated_brackets(const Frame& frame, unsigned max_depth) {
  if (max_depth < 1) throw DomainError("bracket depth must be at least 1");
  auto is_zero = [](const PolyVectorField& v) {
    return std::all_of(v.begin(), v.end(), [](const MultiPoly& c) { return c.is_zero(); });
  };
  std::vector<PolyVectorField> all;
  std::vector<PolyVectorField> layer;
  for (std::size_t k = 0; k < frame.dim_N(); ++k) layer.push_back(frame.field(k));
  auto push_unique = [&](const PolyVectorField& v) {
    if (is_zero(v)) return false;
    if (std::find(all.begin(), all.end(), v) != all.end()) return false;
    all.push_back(v);
    return true;
  };
  for (const auto& v : layer) push_unique(v);
  for (unsigned depth = 2; depth <= max_depth; ++depth) {
    std::vector<PolyVectorField> next;
    for (std::size_t k = 0; k < frame.dim_N(); ++k)
      for (const auto& b : layer) {
        auto c = lie_bracket(frame.field(k), b, frame.dim_n());
        if (push_unique(c)) next.push_back(std::move(c));
      }
    layer = std::move(next);
    if (layer.empty()) break;
  }
  return all;
}

std::size_t bracket_rank(const Frame& frame, std::span<const Rational> point, unsigned max_depth) {
  const std::size_t n = frame.dim_n();
  if (point.size() != n) throw StructuralError("bracket_rank: point arity mismatch");
  std::vector<Rational> values(frame.vars().size(), Rational(0));
  std::copy(point.begin(), point.end(), values.begin());

  std::vector<std::vector<Rational>> rows;
  for (const auto& v : iterated_brackets(frame, max_depth)) {
    std::vector<Rational> row;
    for (const auto& c : v) row.push_back(c.evaluate(values));
    rows.push_back(std::move(row));
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rational factor = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < n; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

std::size_t bracket_rank(const Frame& frame, std::span<const double> point, unsigned max_depth) {
  const std::size_t n = frame.dim_n();
  if (point.size() != n) throw StructuralError("bracket_rank: point arity mismatch");
  std::vector<double> values(frame.vars().size(), 0.0);
  std::copy(point.begin(), point.end(), values.begin());

  const auto fields = iterated_brackets(frame, max_depth);
  if (fields.empty()) return 0;
  Eigen::MatrixXd m(static_cast<Eigen::Index>(fields.size()), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < fields.size(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = fields[r][c].evaluate(values);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  const double threshold = 1e-10 * std::max(1.0, s.size() ? s(0) : 0.0);
  std::size_t rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i)
    if (s(i) > threshold) ++rank;
  return rank;
}

PolyVectorField z_generator(const StratifiedDescriptor& desc, const VarSet& vars) {
  desc.validate();
  if (vars.size() < desc.dim()) throw StructuralError("z_generator: ring too small");
  PolyVectorField z;
  for (std::size_t i = 0; i < desc.dim(); ++i)
    z.push_back(MultiPoly::variable(vars, i) * Rational(desc.weights[i]));
  return z;
}

}  // namespace hardy::groups
