#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zagreb {

/// Runs the command-line tool. `args` excludes the program name. Returns the
/// process exit code: 0 on success (scan findings are data, not errors),
/// nonzero on usage, IO or precondition failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zagreb
