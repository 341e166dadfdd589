#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace fuzzassess::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 1, kConfigError = 2, kInternalError = 3 };

/// Runs one command line (args[0] is the program name). Reads stdin when
/// --input is "-".
int run(std::span<const std::string> args, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace fuzzassess::cli
