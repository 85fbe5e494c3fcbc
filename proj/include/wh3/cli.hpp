#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wh3::cli {

enum ExitCode { kPass = 0, kFail = 1, kUsage = 2 };

/// Runs the wh3 command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace wh3::cli
