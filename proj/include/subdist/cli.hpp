#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace subdist::cli {

// Exit codes are part of the command-line contract.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitFile = 3;
inline constexpr int kExitNumerical = 4;

/// Runs one command. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace subdist::cli
