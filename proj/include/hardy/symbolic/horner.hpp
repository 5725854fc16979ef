#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hardy/symbolic/multipoly.hpp"

namespace hardy::sym {

/// Floating-point evaluator for a fixed MultiPoly using nested Horner
/// schemes, one variable per nesting level (lowest index outermost).
class HornerPoly {
 public:
  HornerPoly() = default;
  explicit HornerPoly(const MultiPoly& q);

  /// values indexed like the ring of the source polynomial.
  double operator()(std::span<const double> values) const;
  bool is_zero() const { return nodes_.empty(); }
  std::size_t arity() const { return arity_; }

 private:
  struct Node {
    std::int32_t var = -1;       // -1: leaf
    double constant = 0.0;       // leaf value
    std::vector<std::int32_t> children;  // by degree; -1 means zero
  };
  std::int32_t build(std::vector<std::pair<const Monomial*, double>>& terms, std::size_t start);
  double eval(std::int32_t node, std::span<const double> values) const;

  std::vector<Node> nodes_;
  std::int32_t root_ = -1;
  std::size_t arity_ = 0;
};

}  // namespace hardy::sym
