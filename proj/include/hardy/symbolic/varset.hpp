#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hardy::sym {

/// Ordered list of symbol names shared by every polynomial of one ring.
/// Cheap to copy; two VarSets are equal iff their name lists are.
class VarSet {
 public:
  VarSet();
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  /// Throws StructuralError for unknown symbols.
  std::size_t index(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name).has_value(); }

  bool operator==(const VarSet& other) const;
  bool operator!=(const VarSet& other) const { return !(*this == other); }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Ring used by every frame on R^n: coordinates x1..xn, constant normal
/// components n1..nn, the half-space offset d and the exponent p.
VarSet standard_vars(std::size_t dim);

std::string coord_name(std::size_t i);   // 0 -> "x1"
std::string normal_name(std::size_t i);  // 0 -> "n1"

}  // namespace hardy::sym
