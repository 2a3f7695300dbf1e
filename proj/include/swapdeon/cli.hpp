#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace swapdeon {

inline constexpr const char* kVersion = "0.1.0";

// Runs the command line `args` (without the program name). Search commands
// exit 0 (no counterexample within bounds), 1 (countermodel), 2 (input
// error) or 3 (budget exhausted).
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace swapdeon
