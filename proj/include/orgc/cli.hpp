#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace orgc {

// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFails = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitResource = 3;

// Runs one command line (without the program name). JSON goes to out,
// diagnostics and usage to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orgc
