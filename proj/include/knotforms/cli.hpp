#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace knotforms {

// Command-line front end. Returns the process exit code: 0 on success,
// 1 on domain errors, 2 on usage errors. All output goes to the streams so
// tests can run commands in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotforms
