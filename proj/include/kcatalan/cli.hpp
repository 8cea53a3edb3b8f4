#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kcatalan::cli {

enum ExitCode : int { ok = 0, usage_error = 1, refused = 2 };

/// Runs the kcatalan command line on `args` (program name excluded). Output is
/// byte-deterministic for fixed arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kcatalan::cli
