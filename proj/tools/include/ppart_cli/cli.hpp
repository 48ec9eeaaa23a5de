#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ppart::cli {

/// Runs the ppart command line with argv-style arguments (without the
/// program name). Returns the process exit code: 0 success, 1 failure of an
/// asserted check or I/O, 2 invalid arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ppart::cli
