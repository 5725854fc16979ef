#include "hardy/symbolic/scalar_field.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "hardy/errors.hpp"

namespace hardy::sym {

std::vector<bool> ScalarField::collect_uses(const Node& n) {
  std::vector<bool> uses(n.vars.size(), false);
  auto mark_poly = [&](const MultiPoly& q) {
    for (std::size_t v = 0; v < uses.size(); ++v)
      if (q.depends_on(v)) uses[v] = true;
  };
  switch (n.kind) {
    case Kind::Poly:
      mark_poly(n.poly);
      break;
    case Kind::Power:
      mark_poly(n.exponent);
      [[fallthrough]];
    case Kind::Sum:
    case Kind::Product:
      for (const auto& c : n.children)
        for (std::size_t v = 0; v < uses.size(); ++v)
          if (c.node_->uses[v]) uses[v] = true;
      break;
    case Kind::Constant:
      break;
  }
  return uses;
}

ScalarField::ScalarField() : ScalarField(poly(MultiPoly(VarSet()))) {}

ScalarField ScalarField::poly(MultiPoly q) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Poly;
  n->vars = q.vars();
  n->horner = HornerPoly(q);
  n->poly = std::move(q);
  n->uses = collect_uses(*n);
  return ScalarField(std::move(n));
}

ScalarField ScalarField::constant(const VarSet& vars, double value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Constant;
  n->vars = vars;
  n->constant = value;
  n->uses.assign(vars.size(), false);
  return ScalarField(std::move(n));
}

namespace {

void require_common_ring(std::span<const ScalarField> fields, const char* op) {
  for (const auto& f : fields)
    if (f.vars() != fields.front().vars())
      throw StructuralError(std::string("variable-list mismatch in ScalarField ") + op);
}

}  // namespace

bool ScalarField::is_zero() const {
  return (kind() == Kind::Poly && node_->poly.is_zero()) ||
         (kind() == Kind::Constant && node_->constant == 0.0);
}

ScalarField ScalarField::sum(std::vector<ScalarField> terms) {
  if (terms.empty()) throw StructuralError("ScalarField::sum of nothing has no ring");
  require_common_ring(terms, "sum");
  const VarSet vars = terms.front().vars();

  MultiPoly poly_part(vars);
  double const_part = 0.0;
  std::vector<ScalarField> rest;
  auto absorb = [&](const ScalarField& t, auto& self) -> void {
    switch (t.kind()) {
      case Kind::Poly:
        poly_part += t.node_->poly;
        break;
      case Kind::Constant:
        const_part += t.node_->constant;
        break;
      case Kind::Sum:
        for (const auto& c : t.node_->children) self(c, self);
        break;
      default:
        rest.push_back(t);
    }
  };
  for (const auto& t : terms) absorb(t, absorb);

  std::vector<ScalarField> out;
  if (!poly_part.is_zero()) out.push_back(poly(std::move(poly_part)));
  if (const_part != 0.0) out.push_back(constant(vars, const_part));
  for (auto& r : rest) out.push_back(std::move(r));
  if (out.empty()) return poly(MultiPoly(vars));
  if (out.size() == 1) return out.front();

  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->vars = vars;
  n->children = std::move(out);
  n->uses = collect_uses(*n);
  return ScalarField(std::move(n));
}

ScalarField ScalarField::product(std::vector<ScalarField> factors) {
  if (factors.empty()) throw StructuralError("ScalarField::product of nothing has no ring");
  require_common_ring(factors, "product");
  const VarSet vars = factors.front().vars();

  MultiPoly poly_part = MultiPoly::constant(vars, Rational(1));
  double const_part = 1.0;
  std::vector<ScalarField> rest;
  auto absorb = [&](const ScalarField& f, auto& self) -> void {
    switch (f.kind()) {
      case Kind::Poly:
        poly_part *= f.node_->poly;
        break;
      case Kind::Constant:
        const_part *= f.node_->constant;
        break;
      case Kind::Product:
        for (const auto& c : f.node_->children) self(c, self);
        break;
      default:
        rest.push_back(f);
    }
  };
  for (const auto& f : factors) absorb(f, absorb);

  if (poly_part.is_zero() || const_part == 0.0) return poly(MultiPoly(vars));
  std::vector<ScalarField> out;
  const bool unit_poly = poly_part == MultiPoly::constant(vars, Rational(1));
  if (!unit_poly || (rest.empty() && const_part == 1.0)) out.push_back(poly(std::move(poly_part)));
  if (const_part != 1.0) out.push_back(constant(vars, const_part));
  for (auto& r : rest) out.push_back(std::move(r));
  if (out.size() == 1) return out.front();

  auto n = std::make_shared<Node>();
  n->kind = Kind::Product;
  n->vars = vars;
  n->children = std::move(out);
  n->uses = collect_uses(*n);
  return ScalarField(std::move(n));
}

ScalarField ScalarField::power(ScalarField base, MultiPoly exponent) {
  if (base.vars() != exponent.vars())
    throw StructuralError("variable-list mismatch in ScalarField power");
  if (exponent.is_zero()) return poly(MultiPoly::constant(base.vars(), Rational(1)));
  if (exponent == MultiPoly::constant(base.vars(), Rational(1))) return base;
  // Non-negative integer powers of polynomials stay polynomial.
  if (base.kind() == Kind::Poly && exponent.is_constant()) {
    const Rational e = exponent.constant_term();
    if (e.get_den() == 1 && e > 0 && e < 64)
      return poly(base.node_->poly.pow(static_cast<unsigned>(e.get_num().get_ui())));
  }
  auto n = std::make_shared<Node>();
  n->kind = Kind::Power;
  n->vars = base.vars();
  n->children = {std::move(base)};
  n->exponent_horner = HornerPoly(exponent);
  n->exponent = std::move(exponent);
  n->uses = collect_uses(*n);
  return ScalarField(std::move(n));
}

ScalarField ScalarField::power(ScalarField base, const Rational& exponent) {
  auto vars = base.vars();
  return power(std::move(base), MultiPoly::constant(vars, exponent));
}

const MultiPoly& ScalarField::as_poly() const {
  if (kind() != Kind::Poly) throw StructuralError("ScalarField is not a polynomial node");
  return node_->poly;
}

const MultiPoly& ScalarField::exponent() const {
  if (kind() != Kind::Power) throw StructuralError("ScalarField is not a power node");
  return node_->exponent;
}

bool ScalarField::depends_on(std::size_t var) const {
  return var < node_->uses.size() && node_->uses[var];
}

double ScalarField::evaluate(std::span<const double> values) const {
  const Node& n = *node_;
  if (values.size() != n.vars.size()) throw StructuralError("evaluate: point arity mismatch");
  switch (n.kind) {
    case Kind::Poly:
      return n.horner(values);
    case Kind::Constant:
      return n.constant;
    case Kind::Sum: {
      double s = 0.0;
      for (const auto& c : n.children) s += c.evaluate(values);
      return s;
    }
    case Kind::Product: {
      double p = 1.0;
      for (const auto& c : n.children) p *= c.evaluate(values);
      return p;
    }
    case Kind::Power: {
      const double b = n.children.front().evaluate(values);
      const double e = n.exponent_horner(values);
      if (e == std::nearbyint(e) && std::fabs(e) < 1e9) {
        if (b == 0.0 && e < 0.0) throw DomainError("negative power of zero");
        return std::pow(b, e);
      }
      if (!(b > 0.0)) {
        std::ostringstream os;
        os << "fractional power " << e << " of non-positive base " << b;
        throw DomainError(os.str());
      }
      return std::pow(b, e);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double ScalarField::evaluate(const std::map<std::string, double>& point) const {
  const VarSet& vars = node_->vars;
  std::vector<double> values(vars.size(), 0.0);
  for (std::size_t v = 0; v < vars.size(); ++v) {
    auto it = point.find(vars.name(v));
    if (it != point.end()) {
      values[v] = it->second;
    } else if (node_->uses[v]) {
      throw StructuralError("unbound symbol '" + vars.name(v) + "'");
    }
  }
  return evaluate(values);
}

ScalarField ScalarField::differentiate(std::size_t var) const {
  const Node& n = *node_;
  if (var >= n.vars.size()) throw StructuralError("differentiate: variable index out of range");
  if (!n.uses[var]) return poly(MultiPoly(n.vars));
  switch (n.kind) {
    case Kind::Poly:
      return poly(n.poly.partial(var));
    case Kind::Constant:
      return poly(MultiPoly(n.vars));
    case Kind::Sum: {
      std::vector<ScalarField> parts;
      for (const auto& c : n.children) {
        auto dc = c.differentiate(var);
        if (!dc.is_zero()) parts.push_back(std::move(dc));
      }
      if (parts.empty()) return poly(MultiPoly(n.vars));
      return sum(std::move(parts));
    }
    case Kind::Product: {
      std::vector<ScalarField> parts;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        auto di = n.children[i].differentiate(var);
        if (di.is_zero()) continue;
        std::vector<ScalarField> factors;
        for (std::size_t j = 0; j < n.children.size(); ++j)
          factors.push_back(j == i ? di : n.children[j]);
        parts.push_back(product(std::move(factors)));
      }
      if (parts.empty()) return poly(MultiPoly(n.vars));
      return sum(std::move(parts));
    }
    case Kind::Power: {
      if (n.exponent.depends_on(var))
        throw StructuralError("differentiate: exponent depends on '" + n.vars.name(var) + "'");
      const ScalarField& base = n.children.front();
      auto db = base.differentiate(var);
      if (db.is_zero()) return poly(MultiPoly(n.vars));
      MultiPoly lowered = n.exponent - MultiPoly::constant(n.vars, Rational(1));
      return product({poly(n.exponent), power(base, std::move(lowered)), std::move(db)});
    }
  }
  return poly(MultiPoly(n.vars));
}

ScalarField ScalarField::differentiate(std::string_view var) const {
  return differentiate(node_->vars.index(var));
}

std::string ScalarField::to_string() const {
  const Node& n = *node_;
  std::ostringstream os;
  switch (n.kind) {
    case Kind::Poly:
      os << "(" << n.poly.to_string() << ")";
      break;
    case Kind::Constant:
      os << n.constant;
      break;
    case Kind::Sum:
    case Kind::Product: {
      const char* sep = n.kind == Kind::Sum ? " + " : " * ";
      os << "[";
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) os << sep;
        os << n.children[i].to_string();
      }
      os << "]";
      break;
    }
    case Kind::Power:
      os << "Power(" << n.children.front().to_string() << ", " << n.exponent.to_string() << ")";
      break;
  }
  return os.str();
}

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return ScalarField::sum({a, b});
}

ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  return ScalarField::sum(
      {a, ScalarField::product({ScalarField::poly(MultiPoly::constant(b.vars(), Rational(-1))), b})});
}

ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  return ScalarField::product({a, b});
}

double evaluate(const ScalarField& field, const std::map<std::string, double>& point) {
  return field.evaluate(point);
}

ScalarField differentiate(const ScalarField& field, std::string_view var) {
  return field.differentiate(var);
}

}  // namespace hardy::sym
