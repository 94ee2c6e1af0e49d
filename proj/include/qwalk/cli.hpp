#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qwalk {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2 };

/// Runs the `qwalk` command line. `args` excludes the program name.
/// Output files go to --out, else $QWALK_OUT_DIR, else the current directory.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qwalk
