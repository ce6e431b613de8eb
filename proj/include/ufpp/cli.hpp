#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ufpp::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInvalid = 2, kBudget = 3 };

/// Runs the command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace ufpp::cli
