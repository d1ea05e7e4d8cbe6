#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "evencliff/structure.hpp"

namespace evencliff {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitTooLarge = 3 };

/// "m" or "m1,m2"; std::invalid_argument on anything else.
Multiplicities parse_mult(const std::string& text);

/// Inclusive range "a:b" or a single value "a". a > b gives an empty range.
struct IntRange {
  long lo = 0;
  long hi = -1;
};
IntRange parse_range(const std::string& text);

/// Entry point of the evencliff tool; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace evencliff
