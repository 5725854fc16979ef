#include "hardy/symbolic/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "hardy/errors.hpp"

namespace hardy::sym {

// ---- VarSet ---------------------------------------------------------------

VarSet::VarSet() : names_(std::make_shared<const std::vector<std::string>>()) {}

VarSet::VarSet(std::vector<std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw StructuralError("empty variable name");
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw StructuralError("duplicate variable '" + names[i] + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VarSet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

std::size_t VarSet::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw StructuralError("unknown variable '" + std::string(name) + "'");
}

bool VarSet::operator==(const VarSet& other) const {
  return names_ == other.names_ || *names_ == *other.names_;
}

std::string coord_name(std::size_t i) { return "x" + std::to_string(i + 1); }
std::string normal_name(std::size_t i) { return "n" + std::to_string(i + 1); }

VarSet standard_vars(std::size_t dim) {
  std::vector<std::string> names;
  names.reserve(2 * dim + 2);
  for (std::size_t i = 0; i < dim; ++i) names.push_back(coord_name(i));
  for (std::size_t i = 0; i < dim; ++i) names.push_back(normal_name(i));
  names.emplace_back("d");
  names.emplace_back("p");
  return VarSet(std::move(names));
}

// ---- ordering -------------------------------------------------------------

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  auto da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
  auto db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

// ---- MultiPoly --------------------------------------------------------------

MultiPoly::MultiPoly(VarSet vars) : vars_(std::move(vars)) {}

MultiPoly MultiPoly::constant(const VarSet& vars, const Rational& c) {
  MultiPoly q(vars);
  q.add_term(Monomial(vars.size(), 0), c);
  return q;
}

MultiPoly MultiPoly::variable(const VarSet& vars, std::string_view name) {
  return variable(vars, vars.index(name));
}

MultiPoly MultiPoly::variable(const VarSet& vars, std::size_t index) {
  if (index >= vars.size()) throw StructuralError("variable index out of range");
  Monomial m(vars.size(), 0);
  m[index] = 1;
  return monomial(vars, std::move(m), Rational(1));
}

MultiPoly MultiPoly::monomial(const VarSet& vars, Monomial exps, const Rational& c) {
  if (exps.size() != vars.size()) throw StructuralError("monomial arity does not match ring");
  MultiPoly q(vars);
  q.add_term(exps, c);
  return q;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
}

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Monomial(vars_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

std::size_t MultiPoly::total_degree() const {
  // Grlex puts the highest degree first.
  if (terms_.empty()) return 0;
  const auto& m = terms_.begin()->first;
  return std::accumulate(m.begin(), m.end(), std::size_t{0});
}

std::uint32_t MultiPoly::degree_in(std::size_t var) const {
  std::uint32_t deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, m.at(var));
  return deg;
}

bool MultiPoly::depends_on(std::size_t var) const { return degree_in(var) > 0; }

void MultiPoly::require_same_ring(const MultiPoly& other, const char* op) const {
  if (vars_ != other.vars_)
    throw StructuralError(std::string("variable-list mismatch in ") + op);
}

void MultiPoly::add_term(const Monomial& m, const Rational& coeff) {
  Rational c(coeff);
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  require_same_ring(rhs, "poly_add");
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  require_same_ring(rhs, "poly_sub");
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_ring(b, "poly_mul");
  MultiPoly out(a.vars_);
  Monomial m(a.vars_.size());
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly& MultiPoly::operator*=(const Rational& coeff) {
  Rational c(coeff);
  c.canonicalize();
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(vars_, Rational(1));
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::partial(std::size_t var) const {
  if (var >= vars_.size()) throw StructuralError("partial: variable index out of range");
  MultiPoly out(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial dm = m;
    --dm[var];
    out.add_term(dm, c * m[var]);
  }
  return out;
}

MultiPoly MultiPoly::partial(std::string_view var) const { return partial(vars_.index(var)); }

MultiPoly MultiPoly::substitute(std::span<const MultiPoly> images) const {
  if (images.size() != vars_.size())
    throw StructuralError("substitute: need one image per variable");
  if (images.empty()) return *this;
  const VarSet& target = images.front().vars();
  for (const auto& img : images)
    if (img.vars() != target) throw StructuralError("substitute: images over different rings");

  // Power cache per variable, grown on demand.
  std::vector<std::vector<MultiPoly>> powers(vars_.size());
  auto power_of = [&](std::size_t v, std::uint32_t e) -> const MultiPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(target, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };

  MultiPoly out(target);
  for (const auto& [m, c] : terms_) {
    MultiPoly term = constant(target, c);
    for (std::size_t v = 0; v < m.size(); ++v)
      if (m[v] > 0) term *= power_of(v, m[v]);
    out += term;
  }
  return out;
}

MultiPoly MultiPoly::substitute(std::string_view var, const MultiPoly& value) const {
  require_same_ring(value, "substitute");
  const std::size_t idx = vars_.index(var);
  std::vector<MultiPoly> images;
  images.reserve(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i)
    images.push_back(i == idx ? value : variable(vars_, i));
  return substitute(images);
}

MultiPoly MultiPoly::substitute(std::string_view var, const Rational& value) const {
  const std::size_t idx = vars_.index(var);
  MultiPoly out(vars_);
  for (const auto& [m, c] : terms_) {
    Monomial dm = m;
    Rational coef = c;
    for (std::uint32_t k = 0; k < m[idx]; ++k) coef *= value;
    dm[idx] = 0;
    out.add_term(dm, coef);
  }
  return out;
}

MultiPoly MultiPoly::rebase(const VarSet& target) const {
  if (target == vars_) return *this;
  std::vector<std::optional<std::size_t>> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) map[i] = target.find(vars_.name(i));
  MultiPoly out(target);
  for (const auto& [m, c] : terms_) {
    Monomial tm(target.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!map[i]) throw StructuralError("rebase: variable '" + vars_.name(i) + "' not in target ring");
      tm[*map[i]] = m[i];
    }
    out.add_term(tm, c);
  }
  return out;
}

double MultiPoly::evaluate(std::span<const double> values) const {
  if (values.size() != vars_.size()) throw StructuralError("evaluate: point arity mismatch");
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::uint32_t k = 0; k < m[i]; ++k) t *= values[i];
    sum += t;
  }
  return sum;
}

Rational MultiPoly::evaluate(std::span<const Rational> values) const {
  if (values.size() != vars_.size()) throw StructuralError("evaluate: point arity mismatch");
  Rational sum(0);
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::uint32_t k = 0; k < m[i]; ++k) t *= values[i];
    sum += t;
  }
  return sum;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
  return vars_ == other.vars_ && terms_ == other.terms_;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool is_unit = std::all_of(m.begin(), m.end(), [](auto e) { return e == 0; });
    bool wrote = false;
    if (mag != 1 || is_unit) {
      os << mag.get_str();
      wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (wrote) os << "*";
      os << vars_.name(i);
      if (m[i] > 1) os << "^" << m[i];
      wrote = true;
    }
  }
  return os.str();
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) { return a + b; }
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) { return a * b; }
MultiPoly partial(const MultiPoly& q, std::string_view var) { return q.partial(var); }

std::ostream& operator<<(std::ostream& os, const MultiPoly& q) { return os << q.to_string(); }

}  // namespace hardy::sym
