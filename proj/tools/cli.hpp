#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitSolver = 2;

/// Entry point of the `pgraph` tool. `args` excludes the program name.
///   gen    write a synthetic dataset CSV and its ground truth JSON
///   fit    fit a principal graph to a CSV and write a result bundle
///   check  re-validate a result bundle
/// Returns 0 on success, 1 on usage or input errors, 2 on solver errors or
/// failed checks.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pgraph::cli
