#include "hardy/groups/frame.hpp"

#include <cmath>

#include "hardy/errors.hpp"

namespace hardy::groups {

StratifiedDescriptor StratifiedDescriptor::from_strata(std::vector<std::size_t> strata_sizes) {
  StratifiedDescriptor d;
  for (std::size_t l = 0; l < strata_sizes.size(); ++l)
    for (std::size_t i = 0; i < strata_sizes[l]; ++i) d.weights.push_back(static_cast<unsigned>(l + 1));
  d.strata_sizes = std::move(strata_sizes);
  d.validate();
  return d;
}

std::size_t StratifiedDescriptor::homogeneous_dimension() const {
  std::size_t q = 0;
  for (std::size_t l = 0; l < strata_sizes.size(); ++l) q += (l + 1) * strata_sizes[l];
  return q;
}

void StratifiedDescriptor::validate() const {
  if (strata_sizes.empty() || strata_sizes.front() == 0)
    throw StructuralError("stratified descriptor needs a non-empty first stratum");
  std::size_t total = 0, idx = 0;
  for (std::size_t l = 0; l < strata_sizes.size(); ++l) {
    if (strata_sizes[l] == 0) throw StructuralError("empty stratum");
    total += strata_sizes[l];
    for (std::size_t i = 0; i < strata_sizes[l]; ++i, ++idx)
      if (idx >= weights.size() || weights[idx] != l + 1)
        throw StructuralError("dilation weights must equal the stratum index");
  }
  if (total != weights.size()) throw StructuralError("strata sizes do not sum to the dimension");
  if (group_law) {
    if (group_law->product.size() != total)
      throw StructuralError("group law needs one polynomial per coordinate");
    if (group_law->vars.size() < 2 * total)
      throw StructuralError("group law ring must hold x and x'");
  }
}

std::vector<double> StratifiedDescriptor::dilate(const std::vector<double>& x, double lambda) const {
  if (x.size() != weights.size()) throw StructuralError("dilate: point arity mismatch");
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::pow(lambda, weights[i]) * x[i];
  return out;
}

Frame::Frame(std::string name, VarSet vars, std::size_t dim_n,
             std::vector<std::vector<MultiPoly>> coefficients,
             std::optional<StratifiedDescriptor> descriptor)
    : name_(std::move(name)),
      vars_(std::move(vars)),
      dim_n_(dim_n),
      coefficients_(std::move(coefficients)),
      descriptor_(std::move(descriptor)) {
  if (dim_n_ == 0 || vars_.size() < dim_n_) throw StructuralError("frame ring too small");
  for (std::size_t i = 0; i < dim_n_; ++i)
    if (vars_.name(i) != sym::coord_name(i))
      throw StructuralError("frame ring must start with coordinates x1..xn");
  if (coefficients_.empty()) throw StructuralError("frame needs at least one field");
  for (const auto& row : coefficients_) {
    if (row.size() != dim_n_) throw StructuralError("frame row length differs from dimension");
    for (const auto& c : row) {
      if (c.vars() != vars_) throw StructuralError("frame coefficient over a different ring");
      for (std::size_t v = dim_n_; v < vars_.size(); ++v)
        if (c.depends_on(v))
          throw StructuralError("frame coefficient depends on non-coordinate '" + vars_.name(v) + "'");
    }
  }
  if (descriptor_) {
    descriptor_->validate();
    if (descriptor_->dim() != dim_n_) throw StructuralError("descriptor dimension mismatch");
    if (descriptor_->strata_sizes.front() != coefficients_.size())
      throw StructuralError("first stratum size must equal the number of fields");
  }
}

const MultiPoly& Frame::coefficient(std::size_t k, std::size_t j) const {
  if (k >= dim_N() || j >= dim_n_) throw StructuralError("frame index out of range");
  return coefficients_[k][j];
}

const std::vector<MultiPoly>& Frame::field(std::size_t k) const {
  if (k >= dim_N()) throw StructuralError("frame field index out of range");
  return coefficients_[k];
}

MultiPoly Frame::apply(std::size_t k, const MultiPoly& f) const {
  if (f.vars() != vars_) throw StructuralError("variable mismatch applying frame field");
  return apply_field(field(k), f);
}

Frame Frame::rebased(const VarSet& target) const {
  std::vector<std::vector<MultiPoly>> rows;
  for (const auto& row : coefficients_) {
    std::vector<MultiPoly> r;
    for (const auto& c : row) r.push_back(c.rebase(target));
    rows.push_back(std::move(r));
  }
  return Frame(name_, target, dim_n_, std::move(rows), descriptor_);
}

Frame Frame::with_coefficient(std::size_t k, std::size_t j, MultiPoly value) const {
  auto rows = coefficients_;
  if (k >= rows.size() || j >= dim_n_) throw StructuralError("frame index out of range");
  rows[k][j] = std::move(value);
  return Frame(name_, vars_, dim_n_, std::move(rows), descriptor_);
}

std::vector<double> Frame::coefficients_at(std::span<const double> x) const {
  if (x.size() != dim_n_) throw StructuralError("coefficients_at: point arity mismatch");
  std::vector<double> values(vars_.size(), 0.0);
  std::copy(x.begin(), x.end(), values.begin());
  std::vector<double> out;
  out.reserve(dim_N() * dim_n_);
  for (const auto& row : coefficients_)
    for (const auto& c : row) out.push_back(c.evaluate(values));
  return out;
}

MultiPoly apply_field(const PolyVectorField& v, const MultiPoly& f) {
  MultiPoly out(f.vars());
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j].is_zero()) continue;
    if (v[j].vars() != f.vars()) throw StructuralError("variable mismatch applying vector field");
    out += v[j] * f.partial(j);
  }
  return out;
}

}  // namespace hardy::groups
