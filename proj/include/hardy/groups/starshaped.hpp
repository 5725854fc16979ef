#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hardy/groups/frame.hpp"

namespace hardy::groups {

enum class StarshapedVerdict { StrictlyStarshaped, Starshaped, Violated };

std::string to_string(StarshapedVerdict v);

struct StarshapedOptions {
  std::size_t samples = 512;   // rays
  std::uint64_t seed = 1;
  double strict_threshold = 1e-10;
  double root_tolerance = 1e-12;
};

struct StarshapedResult {
  StarshapedVerdict verdict = StarshapedVerdict::StrictlyStarshaped;
  std::size_t boundary_points = 0;
  double min_value = 0.0;          // smallest sampled <Z, n>
  std::vector<double> witness;     // point attaining min_value
};

/// Samples the boundary of {phi < 0} along random rays from the origin and
/// evaluates <Z(x), n(x)> with n the Euclidean outer unit normal. `levelset`
/// lives over a ring whose first desc.dim() variables are the coordinates.
/// Throws SamplingError when no ray meets the boundary and
/// DegenerateBoundaryError when grad phi vanishes at a sampled point.
StarshapedResult starshaped_check(const StratifiedDescriptor& desc, const MultiPoly& levelset,
                                  const StarshapedOptions& options = {});

}  // namespace hardy::groups
