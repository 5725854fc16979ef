#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hardy::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,       // identity or deficit check failed
  kExitInadmissible = 2,  // test function support leaves the domain
  kExitViolated = 3,      // starshapedness violated
  kExitDegenerate = 4,    // degenerate or unsampled boundary
  kExitLpSurvives = 5,    // Rayleigh probe on a spec with an L_p term
  kExitUsage = 64,        // bad flags, config or input
};

/// Entry point of the `hardy` tool. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hardy::cli
