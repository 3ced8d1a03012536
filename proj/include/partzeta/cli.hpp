#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace partzeta::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int { kIdentity = 0, kNotIdentity = 1, kError = 2 };

/// Runs the `partzeta` command line. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace partzeta::cli
