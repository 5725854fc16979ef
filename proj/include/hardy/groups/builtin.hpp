#pragma once

#include <string>
#include <string_view>

#include "hardy/groups/frame.hpp"

namespace hardy::groups {

/// H_1: X1 = d1 + 2 x2 d3, X2 = d2 - 2 x1 d3 with strata [2, 1].
Frame make_heisenberg();
/// Engel group on R^4, strata [2, 1, 1], group law with the P3/P4 terms.
Frame make_engel();
/// Grushin plane: X1 = d1, X2 = x1 d2. No group structure.
Frame make_grushin();

/// "heisenberg1", "engel" or "grushin"; otherwise a frame definition file.
Frame frame_by_name(std::string_view name_or_path);

/// Frame definition text: one line per field, n comma-separated polynomial
/// coefficients in x1..xn. '#' starts a comment. An optional line
/// "strata: 2,1" attaches stratified metadata.
Frame parse_frame_definition(std::string_view text, std::string name = "custom");
Frame load_frame_file(const std::string& path);

/// Ring used by group laws: x1..xn followed by x1'..xn'.
VarSet group_law_vars(std::size_t dim);

}  // namespace hardy::groups
