#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liemult {

/// Command-line front end. Exit codes:
///   0  success
///   1  validation failure (Jacobi violations, malformed input, bad ideals)
///   2  unsupported mode/field combination
///   3  internal error
///   4  reproduce mismatch against the expectation table
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace liemult
