#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lgcert::cli {

enum ExitCode : int { Ok = 0, InternalError = 1, BadInput = 2, OutOfBudget = 3 };

/// Runs one `lgcert` command. `args` excludes the program name. The report
/// goes to `out`, diagnostics to `err`; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lgcert::cli
