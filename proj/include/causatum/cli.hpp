#pragma once

#include <string>
#include <vector>

namespace causatum {

// Outcome of one CLI invocation. Machine-readable `key=value` lines come
// first; anything after a `---` separator is prose. Exit codes: 0 success,
// 1 domain error, 2 usage error.
struct CommandResult {
  int exit_code = 0;
  std::string output;
};

// Dispatches one of: worlds, plan, explain, inus, fork, srel, bench.
// argv excludes the program name. Deterministic: identical argv and files
// produce byte-identical output.
CommandResult run_command(const std::vector<std::string>& argv);

}  // namespace causatum
