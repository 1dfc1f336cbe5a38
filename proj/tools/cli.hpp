#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rds11::cli {

/// Run the command-line front end. args excludes the program name.
/// Exit codes: 0 success, 2 validation, 3 forbidden initial condition or
/// zero denominator, 4 verification failure.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rds11::cli
