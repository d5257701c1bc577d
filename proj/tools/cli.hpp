#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partlat {

/// Runs the partlat command line. `args` excludes the program name.
/// Returns 0 on success, 1 on a validation or expectation failure and 2 on a
/// usage or parse error. Input files named "-" are read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace partlat
