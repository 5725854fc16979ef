#pragma once

#include <span>
#include <vector>

#include "hardy/groups/frame.hpp"
#include "hardy/symbolic/scalar_field.hpp"

namespace hardy::calculus {

using groups::Frame;
using sym::MultiPoly;
using sym::ScalarField;
using sym::VectorField;

/// (X_1 w, ..., X_N w), exact.
std::vector<MultiPoly> horizontal_gradient(const Frame& frame, const MultiPoly& w);

/// sum_k X_k F_k for an N-component polynomial field, exact.
MultiPoly horizontal_divergence(const Frame& frame, std::span<const MultiPoly> F);

/// X_k applied to an expression tree.
ScalarField apply_field(const Frame& frame, std::size_t k, const ScalarField& f);

/// Horizontal gradient of an expression tree (a horizontal VectorField).
VectorField horizontal_gradient(const Frame& frame, const ScalarField& w);

/// sum_k X_k F_k for a horizontal VectorField.
ScalarField horizontal_divergence(const Frame& frame, const VectorField& F);

}  // namespace hardy::calculus
