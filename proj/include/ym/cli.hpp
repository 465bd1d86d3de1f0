#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ym::cli {

// Exit codes: 0 verified/clean, 1 mathematical failure, 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInput = 2;

// Runs one command; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace ym::cli
