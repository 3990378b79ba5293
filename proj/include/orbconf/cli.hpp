#pragma once

// Batch front end. Every subcommand builds one JSON report; the table format
// is rendered from that report.

#include <iosfwd>
#include <string>
#include <vector>

namespace orbconf::cli {

inline constexpr const char* kToolName = "orbconf";
inline constexpr const char* kVersion = "0.1.0";

/// Stable exit codes.
enum Exit : int {
  ok = 0,
  unexpected = 1,
  invalid_input = 2,
  reflector = 3,
  guard_rail = 4,
  verification_failed = 5,
  no_witness = 6,
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbconf::cli
