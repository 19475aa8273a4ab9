#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace easycat {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kResourceCap = 3 };

/// Runs one batch job. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace easycat
