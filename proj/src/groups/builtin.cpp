#include "hardy/groups/builtin.hpp"

#include <fstream>
#include <sstream>

#include "hardy/errors.hpp"
#include "hardy/symbolic/parse.hpp"

namespace hardy::groups {

using sym::make_rational;
using sym::Rational;

VarSet group_law_vars(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back(sym::coord_name(i));
  for (std::size_t i = 0; i < dim; ++i) names.push_back(sym::coord_name(i) + "'");
  return VarSet(std::move(names));
}

namespace {

std::vector<std::vector<MultiPoly>> parse_rows(const VarSet& vars,
                                               std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<std::vector<MultiPoly>> out;
  for (const auto& row : rows) {
    std::vector<MultiPoly> r;
    for (const char* c : row) r.push_back(sym::parse_polynomial(c, vars));
    out.push_back(std::move(r));
  }
  return out;
}

GroupLaw parse_law(std::size_t dim, std::initializer_list<const char*> components) {
  GroupLaw law{group_law_vars(dim), {}};
  for (const char* c : components) law.product.push_back(sym::parse_polynomial(c, law.vars));
  return law;
}

}  // namespace

Frame make_heisenberg() {
  const auto vars = sym::standard_vars(3);
  auto desc = StratifiedDescriptor::from_strata({2, 1});
  desc.group_law = parse_law(3, {"x1 + x1'", "x2 + x2'", "x3 + x3' + 2*(x1'*x2 - x1*x2')"});
  return Frame("heisenberg1", vars, 3,
               parse_rows(vars, {{"1", "0", "2*x2"}, {"0", "1", "-2*x1"}}), std::move(desc));
}

Frame make_engel() {
  const auto vars = sym::standard_vars(4);
  auto desc = StratifiedDescriptor::from_strata({2, 1, 1});
  desc.group_law = parse_law(
      4, {"x1 + x1'", "x2 + x2'", "x3 + x3' + 1/2*(x1*x2' - x2*x1')",
          "x4 + x4' + 1/2*(x1*x3' - x3*x1') + 1/12*(x1^2*x2' - x1*x1'*(x2 + x2') + x2*x1'^2)"});
  return Frame("engel", vars, 4,
               parse_rows(vars, {{"1", "0", "-x2/2", "-x3/2 - x1*x2/12"},
                                 {"0", "1", "x1/2", "x1^2/12"}}),
               std::move(desc));
}

Frame make_grushin() {
  const auto vars = sym::standard_vars(2);
  return Frame("grushin", vars, 2, parse_rows(vars, {{"1", "0"}, {"0", "x1"}}));
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.emplace_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Frame parse_frame_definition(std::string_view text, std::string name) {
  std::vector<std::vector<std::string>> rows;
  std::optional<std::vector<std::size_t>> strata;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("strata:", 0) == 0) {
      std::vector<std::size_t> sizes;
      for (const auto& tok : split(line.substr(7), ',')) {
        auto t = trim(tok);
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
          throw ParseError("line " + std::to_string(lineno) + ": malformed strata list");
        sizes.push_back(std::stoul(t));
      }
      strata = std::move(sizes);
      continue;
    }
    std::vector<std::string> cells;
    for (const auto& tok : split(line, ',')) cells.push_back(trim(tok));
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) throw ParseError("frame definition has no fields");
  const std::size_t n = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != n) throw ParseError("frame definition rows have different lengths");

  const auto vars = sym::standard_vars(n);
  std::vector<std::vector<MultiPoly>> coefficients;
  for (const auto& r : rows) {
    std::vector<MultiPoly> row;
    for (const auto& cell : r) {
      auto q = sym::parse_polynomial(cell, vars);
      for (std::size_t v = n; v < vars.size(); ++v)
        if (q.depends_on(v))
          throw ParseError("frame coefficient '" + cell + "' uses non-coordinate symbol " + vars.name(v));
      row.push_back(std::move(q));
    }
    coefficients.push_back(std::move(row));
  }
  std::optional<StratifiedDescriptor> desc;
  if (strata) {
    try {
      desc = StratifiedDescriptor::from_strata(*strata);
    } catch (const StructuralError& e) {
      throw ParseError(std::string("bad strata: ") + e.what());
    }
  }
  try {
    return Frame(std::move(name), vars, n, std::move(coefficients), std::move(desc));
  } catch (const StructuralError& e) {
    throw ParseError(std::string("invalid frame: ") + e.what());
  }
}

Frame load_frame_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open frame file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_frame_definition(buf.str(), path);
}

Frame frame_by_name(std::string_view name_or_path) {
  if (name_or_path == "heisenberg1") return make_heisenberg();
  if (name_or_path == "engel") return make_engel();
  if (name_or_path == "grushin") return make_grushin();
  return load_frame_file(std::string(name_or_path));
}

}  // namespace hardy::groups
