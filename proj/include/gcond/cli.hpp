#pragma once

#include <string>
#include <vector>

namespace gcond {

struct CommandOutcome {
  int exit_status = 0;  // 0 success, 1 violation or disagreement, 2 usage error
  std::string out;
  std::string err;
};

// Runs one command line; args excludes the program name.
CommandOutcome run_command(const std::vector<std::string>& args);

}  // namespace gcond
