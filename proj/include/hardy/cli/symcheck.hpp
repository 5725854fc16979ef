#pragma once

#include <string>
#include <vector>

namespace hardy::cli {

struct IdentityResult {
  std::string name;
  bool pass = false;
  std::string residual;  // empty when passing
};

/// Exact identity suite over the built-in frames. With `tamper` the
/// Heisenberg X1 gets a wrong d/dx3 coefficient, which breaks every
/// identity derived from the Heisenberg frame.
std::vector<IdentityResult> run_identity_suite(bool tamper = false);

/// One line per identity, names right-aligned so that the status column
/// lines up: "<name> PASS" or "<name> FAIL  residual: ...".
std::string format_identity_results(const std::vector<IdentityResult>& results);

}  // namespace hardy::cli
