#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subdivlab::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input = 2;   // bad flags, unknown subcommand, malformed input
inline constexpr int exit_budget = 3;  // a search ran out of budget
inline constexpr int exit_other = 4;

// Runs one command line (without the program name). Artifacts go to the
// --out path when given, otherwise to `out`; failures print
// {"error": kind, "message": text} on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subdivlab::cli
