#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace malleq {

// Whole command-line surface; `args` excludes the program name.
// Returns the process exit code: 0 success / equivalent / true,
// 1 inequivalent / false, 2 usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace malleq
