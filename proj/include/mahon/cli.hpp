#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mahon {

// Runs the command line tool on the given arguments (program name excluded),
// writing results to `out` and diagnostics to `err`. Returns the process
// exit code: 0 when every requested result is as expected, 1 when a
// verification produced an unexpected outcome or a health check failed,
// 2 for usage, parse, or constraint errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mahon
