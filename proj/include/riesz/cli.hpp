#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace riesz::cli {

/// Parse arguments and execute one task.  Returns the process exit status:
/// 0 success, 1 validation error, 2 numeric failure.  Errors are reported as
/// one JSON object on the error stream.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace riesz::cli
