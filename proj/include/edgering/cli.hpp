#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace edgering {

/// Runs one CLI invocation (args excludes the program name). Writes reports
/// to `out`, diagnostics and timings to `err`. Exit codes: 0 ok, 2 invariant
/// violation, 3 input error, 4 resource guard.
int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace edgering
