#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hardy/symbolic/rational.hpp"
#include "hardy/symbolic/varset.hpp"

namespace hardy::sym {

/// Exponent multi-index, one entry per variable of the ring.
using Monomial = std::vector<std::uint32_t>;

/// Graded-lexicographic order, largest first: higher total degree wins,
/// ties broken by the first differing exponent.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Zero coefficients are never stored, so structural equality of the
/// term maps is mathematical equality.
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(VarSet vars);

  static MultiPoly constant(const VarSet& vars, const Rational& c);
  static MultiPoly variable(const VarSet& vars, std::string_view name);
  static MultiPoly variable(const VarSet& vars, std::size_t index);
  static MultiPoly monomial(const VarSet& vars, Monomial exps, const Rational& c);

  const VarSet& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  std::size_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const;

  MultiPoly& operator+=(const MultiPoly& rhs);
  MultiPoly& operator-=(const MultiPoly& rhs);
  MultiPoly& operator*=(const MultiPoly& rhs);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  MultiPoly pow(unsigned exponent) const;

  MultiPoly partial(std::size_t var) const;
  MultiPoly partial(std::string_view var) const;

  /// Replaces variable i by images[i]; all images share one (target) ring.
  MultiPoly substitute(std::span<const MultiPoly> images) const;
  /// Replaces one variable by a polynomial over the same ring.
  MultiPoly substitute(std::string_view var, const MultiPoly& value) const;
  MultiPoly substitute(std::string_view var, const Rational& value) const;

  /// Re-expresses the polynomial over another ring, matching variables by
  /// name. Fails if a variable actually used is missing from the target.
  MultiPoly rebase(const VarSet& target) const;

  /// values.size() must equal vars().size().
  double evaluate(std::span<const double> values) const;
  Rational evaluate(std::span<const Rational> values) const;

  bool operator==(const MultiPoly& other) const;
  bool operator!=(const MultiPoly& other) const { return !(*this == other); }

  /// Deterministic rendering in graded-lex order, e.g. "2*x1^2*n3 - 1/2".
  std::string to_string() const;

 private:
  void require_same_ring(const MultiPoly& other, const char* op) const;
  void add_term(const Monomial& m, const Rational& c);

  VarSet vars_;
  TermMap terms_;
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly partial(const MultiPoly& q, std::string_view var);

std::ostream& operator<<(std::ostream& os, const MultiPoly& q);

}  // namespace hardy::sym
