#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alliance::cli {

// Runs one CLI invocation: a single JSON report on `out`, diagnostics on
// `err`. Exit codes: 0 success with a result, 1 provable absence or a false
// verdict, 2 input error.
int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace alliance::cli
