#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pafdp {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitInput = 3,
  kExitCapacity = 4,
};

/// Runs one CLI invocation (args excludes the program name). Records go to
/// `out`, diagnostics to `err`. Process-wide limits (address-space cap) are
/// only applied when `apply_process_limits` is set.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            bool apply_process_limits = false);

}  // namespace pafdp
