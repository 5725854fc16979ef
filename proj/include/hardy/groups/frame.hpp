#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hardy/symbolic/multipoly.hpp"

namespace hardy::groups {

using sym::MultiPoly;
using sym::VarSet;

/// Coordinate vector field with polynomial coefficients: component j is the
/// coefficient of d/dx_j.
using PolyVectorField = std::vector<MultiPoly>;

/// Group multiplication x o x' as polynomials over the ring
/// (x1..xn, x1'..xn').
struct GroupLaw {
  VarSet vars;
  std::vector<MultiPoly> product;
};

/// Metadata of a stratified (Carnot) group on R^n.
struct StratifiedDescriptor {
  std::vector<std::size_t> strata_sizes;  // [N, N_2, ..., N_r]
  std::vector<unsigned> weights;          // dilation weight per coordinate
  std::optional<GroupLaw> group_law;

  /// Weights 1 on the first stratum, l on stratum l.
  static StratifiedDescriptor from_strata(std::vector<std::size_t> strata_sizes);

  std::size_t dim() const { return weights.size(); }
  std::size_t step() const { return strata_sizes.size(); }
  /// Q = sum_l l * N_l.
  std::size_t homogeneous_dimension() const;
  void validate() const;

  /// delta_lambda applied to a point.
  std::vector<double> dilate(const std::vector<double>& x, double lambda) const;
};

/// N horizontal vector fields X_1..X_N on R^n. Entry (k, j) is the
/// coefficient of d/dx_j in X_k. The ring's first n variables are the
/// coordinates x1..xn; coefficients may only depend on those.
class Frame {
 public:
  Frame(std::string name, VarSet vars, std::size_t dim_n,
        std::vector<std::vector<MultiPoly>> coefficients,
        std::optional<StratifiedDescriptor> descriptor = std::nullopt);

  const std::string& name() const { return name_; }
  const VarSet& vars() const { return vars_; }
  std::size_t dim_n() const { return dim_n_; }
  std::size_t dim_N() const { return coefficients_.size(); }
  const MultiPoly& coefficient(std::size_t k, std::size_t j) const;
  const std::vector<MultiPoly>& field(std::size_t k) const;
  const std::optional<StratifiedDescriptor>& descriptor() const { return descriptor_; }

  /// X_k f for f over the frame's ring.
  MultiPoly apply(std::size_t k, const MultiPoly& f) const;

  /// Same fields over a larger ring (coordinates must stay first).
  Frame rebased(const VarSet& target) const;
  /// Copy with one coefficient replaced; used by negative controls.
  Frame with_coefficient(std::size_t k, std::size_t j, MultiPoly value) const;

  /// Coefficient matrix evaluated at a coordinate point (length dim_n).
  std::vector<double> coefficients_at(std::span<const double> x) const;

 private:
  std::string name_;
  VarSet vars_;
  std::size_t dim_n_;
  std::vector<std::vector<MultiPoly>> coefficients_;
  std::optional<StratifiedDescriptor> descriptor_;
};

/// First-order differential operator sum_j V_j d/dx_j applied to f.
MultiPoly apply_field(const PolyVectorField& v, const MultiPoly& f);

}  // namespace hardy::groups
