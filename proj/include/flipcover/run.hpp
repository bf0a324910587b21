#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flipcover {

// CLI entry point shared by the binary and the in-process tests.  args is
// argv without the program name.  Results go to out (or the --out file),
// machine-readable error JSON goes to err; the return value is the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace flipcover
