#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropfan::cli {

/// Runs one command line (without the program name). Results go to `out` as
/// a single JSON document (or SVG for `fan plot`); errors are reported on
/// `out` as {"error": {"code", "message"}}. Returns 0 on success, 1 for a
/// domain error and 2 for a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropfan::cli
