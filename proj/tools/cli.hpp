#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphsq::cli {

enum ExitCode : int { kHolds = 0, kViolated = 1, kUsage = 2, kUndecided = 3 };

/// Runs one command line. args excludes the program name; `in` supplies
/// graph6 lines when a graph argument is omitted or "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace graphsq::cli
