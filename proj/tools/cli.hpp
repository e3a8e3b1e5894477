#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mayer::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kUsage = 2, kNumeric = 3 };

// Runs the command line `args` (without the program name). Reports go to
// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mayer::cli
