#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schwarzian::cli {

/// Runs one CLI invocation; args excludes the program name.
/// Returns 0 on success, 1 when verification is falsified, 2 on bad arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schwarzian::cli
