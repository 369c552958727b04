#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bittp::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_input = 2,
  exit_internal = 3,
};

// Entry point shared by the executable and the tests. `args` excludes the
// program name, e.g. {"solve", "--instance", "a.ttp"}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bittp::cli
