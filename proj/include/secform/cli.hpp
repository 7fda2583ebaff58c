#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace secform {

/// Command-line front end; args exclude the program name.
/// Exit codes: 0 success / check passed, 1 a verified bound was violated,
/// 2 usage or validation error, 3 mathematical precondition violated.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace secform
