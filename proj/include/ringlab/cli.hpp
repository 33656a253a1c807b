#pragma once

#include <ostream>
#include <span>
#include <string>

namespace ringlab {

/// Runs one ringlab command. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`. Returns the process exit code:
/// 0 success, 1 usage or parse error, 2 construction or precondition error,
/// 3 a verification check failed.
int run_command(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ringlab
