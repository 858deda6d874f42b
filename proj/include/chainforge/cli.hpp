#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chainforge {

// Full command-line driver. Returns the process exit code:
//   0  everything ran and passed
//   1  a verification produced a failure or counterexample
//   2  usage error or budget exceeded
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chainforge
