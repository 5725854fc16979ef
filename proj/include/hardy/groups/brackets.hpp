#pragma once

#include <span>

#include "hardy/groups/frame.hpp"
#include "hardy/symbolic/rational.hpp"

namespace hardy::groups {

/// [A, B] for coordinate fields over the same ring on R^dim:
/// component m = sum_l (A_l d_l B_m - B_l d_l A_m).
PolyVectorField lie_bracket(const PolyVectorField& a, const PolyVectorField& b, std::size_t dim);

/// [X_i, X_j] of the frame, 0-based indices.
PolyVectorField commutator(const Frame& frame, std::size_t i, std::size_t j);

/// Left-normed iterated brackets of length 1..max_depth with zero fields
/// and exact duplicates removed. Depth 1 is the frame itself.
std::vector<PolyVectorField> iterated_brackets(const Frame& frame, unsigned max_depth);

/// Dimension of the span of all iterated brackets up to max_depth at a
/// point, by exact row reduction.
std::size_t bracket_rank(const Frame& frame, std::span<const sym::Rational> point,
                         unsigned max_depth);
/// Same, via singular values (threshold 1e-10 relative to max(1, s_max)).
std::size_t bracket_rank(const Frame& frame, std::span<const double> point, unsigned max_depth);

/// Z = sum_i w_i x_i d/dx_i over the ring `vars`.
PolyVectorField z_generator(const StratifiedDescriptor& desc, const VarSet& vars);

}  // namespace hardy::groups
