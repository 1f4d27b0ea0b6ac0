#pragma once

#include <string>
#include <vector>

namespace oh {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

/// Runs the `oh` command line (arguments without the program name).
/// Exit codes: 0 success, 1 negative answer or domain error, 2 usage/syntax.
RunResult run(const std::vector<std::string>& args);

}  // namespace oh
