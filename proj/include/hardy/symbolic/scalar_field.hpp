#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hardy/symbolic/horner.hpp"
#include "hardy/symbolic/multipoly.hpp"

namespace hardy::sym {

/// Immutable expression tree over a ring: polynomials closed under sums,
/// products, real powers and floating constants. Used wherever exponents
/// such as p - 2 take a field out of the polynomial world.
///
/// Power(base, e) keeps its exponent as a MultiPoly that must not depend on
/// any variable the field is differentiated with respect to (typically it
/// is a rational constant or an affine expression in the symbol p).
/// Integer exponents accept any base (except 0 with a negative exponent);
/// non-integer exponents require a strictly positive base.
class ScalarField {
 public:
  enum class Kind { Poly, Sum, Product, Power, Constant };

  ScalarField();  // zero over the empty ring

  static ScalarField poly(MultiPoly q);
  static ScalarField constant(const VarSet& vars, double value);
  static ScalarField sum(std::vector<ScalarField> terms);
  static ScalarField product(std::vector<ScalarField> factors);
  static ScalarField power(ScalarField base, MultiPoly exponent);
  static ScalarField power(ScalarField base, const Rational& exponent);

  Kind kind() const { return node_->kind; }
  const VarSet& vars() const { return node_->vars; }
  bool is_zero() const;

  const MultiPoly& as_poly() const;  // Kind::Poly only
  std::span<const ScalarField> children() const { return node_->children; }
  const MultiPoly& exponent() const;  // Kind::Power only

  /// values indexed like vars(); size must match.
  double evaluate(std::span<const double> values) const;
  /// Binding by name. Every symbol the field depends on must be bound.
  double evaluate(const std::map<std::string, double>& point) const;

  ScalarField differentiate(std::size_t var) const;
  ScalarField differentiate(std::string_view var) const;

  /// True if var occurs anywhere in the tree.
  bool depends_on(std::size_t var) const;

  std::string to_string() const;

  friend ScalarField operator+(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator-(const ScalarField& a, const ScalarField& b);
  friend ScalarField operator*(const ScalarField& a, const ScalarField& b);

 private:
  struct Node {
    Kind kind = Kind::Poly;
    VarSet vars;
    MultiPoly poly;
    HornerPoly horner;
    std::vector<ScalarField> children;
    MultiPoly exponent;
    HornerPoly exponent_horner;
    double constant = 0.0;
    std::vector<bool> uses;
  };
  explicit ScalarField(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static std::vector<bool> collect_uses(const Node& n);

  std::shared_ptr<const Node> node_;
};

/// A list of scalar fields. Coordinate fields have one component per
/// coordinate of R^n; horizontal fields have one per frame direction.
struct VectorField {
  std::vector<ScalarField> components;
  bool horizontal = false;

  std::size_t size() const { return components.size(); }
  const ScalarField& operator[](std::size_t i) const { return components[i]; }
};

double evaluate(const ScalarField& field, const std::map<std::string, double>& point);
ScalarField differentiate(const ScalarField& field, std::string_view var);

}  // namespace hardy::sym
