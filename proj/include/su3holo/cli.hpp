#pragma once

// Command-line front end. Every subcommand is first turned into a
// "su3holo/1" job descriptor, so flags and descriptor files share one path.

#include <iosfwd>
#include <string>
#include <vector>

namespace su3holo::cli {

inline constexpr const char* kSchema = "su3holo/1";

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kDegenerateInput = 2 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Fixed column order of sweep CSV output.
const std::vector<std::string>& sweep_columns();

}  // namespace su3holo::cli
