#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vecmatch::cli {

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vecmatch::cli
