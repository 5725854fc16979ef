#include "hardy/symbolic/horner.hpp"

#include "hardy/errors.hpp"

namespace hardy::sym {

HornerPoly::HornerPoly(const MultiPoly& q) : arity_(q.vars().size()) {
  if (q.is_zero()) return;
  std::vector<std::pair<const Monomial*, double>> terms;
  terms.reserve(q.term_count());
  for (const auto& [m, c] : q.terms()) terms.emplace_back(&m, c.get_d());
  root_ = build(terms, 0);
}

std::int32_t HornerPoly::build(std::vector<std::pair<const Monomial*, double>>& terms,
                               std::size_t start) {
  std::size_t var = start;
  for (; var < arity_; ++var) {
    bool used = false;
    for (const auto& t : terms)
      if ((*t.first)[var] != 0) {
        used = true;
        break;
      }
    if (used) break;
  }

  const auto id = static_cast<std::int32_t>(nodes_.size());
  nodes_.emplace_back();
  if (var == arity_) {
    double sum = 0.0;
    for (const auto& t : terms) sum += t.second;
    nodes_[id].constant = sum;
    return id;
  }

  std::uint32_t max_deg = 0;
  for (const auto& t : terms) max_deg = std::max(max_deg, (*t.first)[var]);
  std::vector<std::int32_t> children(max_deg + 1, -1);
  for (std::uint32_t deg = 0; deg <= max_deg; ++deg) {
    std::vector<std::pair<const Monomial*, double>> group;
    for (const auto& t : terms)
      if ((*t.first)[var] == deg) group.push_back(t);
    if (!group.empty()) children[deg] = build(group, var + 1);
  }
  nodes_[id].var = static_cast<std::int32_t>(var);
  nodes_[id].children = std::move(children);
  return id;
}

double HornerPoly::eval(std::int32_t node, std::span<const double> values) const {
  const Node& n = nodes_[static_cast<std::size_t>(node)];
  if (n.var < 0) return n.constant;
  const double x = values[static_cast<std::size_t>(n.var)];
  double acc = 0.0;
  for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) {
    acc *= x;
    if (*it >= 0) acc += eval(*it, values);
  }
  return acc;
}

double HornerPoly::operator()(std::span<const double> values) const {
  if (root_ < 0) return 0.0;
  if (values.size() < arity_) throw StructuralError("HornerPoly: point arity mismatch");
  return eval(root_, values);
}

}  // namespace hardy::sym
