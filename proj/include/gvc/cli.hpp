#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gvc::cli {

// Exit codes: 0 success, 1 mathematical falsification with witness,
// 2 input/config error, 3 engine precondition or form failure.
inline constexpr int exit_ok = 0;
inline constexpr int exit_falsified = 1;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_engine_error = 3;

// Runs the command line (without the program name) against the given
// streams. The gvc binary is a thin wrapper over this, and tests drive it
// in-process.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace gvc::cli
