#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dehn::cli {

// Exit codes of the command-line surface.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitUsage = 64;

/// Parses and runs one invocation; args excludes the program name.
/// Prints human-readable text, or a single JSON object when --json is given,
/// to `out`; usage and error text goes to `err` in text mode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dehn::cli
