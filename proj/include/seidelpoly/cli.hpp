#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seidelpoly {

/// Runs one CLI invocation. Returns 0 on success, 1 on usage or
/// precondition errors, 2 on internal assertion failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seidelpoly
