#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rkb::cli {

enum ExitCode : int { kPass = 0, kUsage = 1, kRefuted = 2, kInconclusive = 3 };

/// Runs one experiment. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rkb::cli
