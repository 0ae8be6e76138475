#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace geneo {

/// Entry point of the `geneo` command-line tool. `args` excludes the program
/// name. Returns 0 on success, 1 on an infeasible configuration or runtime
/// failure, 2 on bad arguments or malformed input. Diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace geneo
