#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cliff::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 2;
inline constexpr int kAlgebraError = 3;

// Runs the command line (without the program name). Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cliff::cli
