#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gfix::cli {

enum ExitStatus : int {
  kExitPassed = 0,
  kExitViolations = 1,
  kExitConfigError = 2,
};

/// Runs the gfix command line (`args` excludes the program name). Reports and
/// summaries go to `out` unless `--out` names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Exact header line of the iteration trace CSV.
inline constexpr const char* kTraceHeader = "n,alpha_n,residual,true_error,bound,slack";
/// Header of the product bound CSV written by `bound`.
inline constexpr const char* kBoundHeader = "n,alpha_n,factor,product";

}  // namespace gfix::cli
