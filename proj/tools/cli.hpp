#pragma once

// Command-line front end. `run` never writes to the process streams; main()
// forwards the captured payload and diagnostics.

#include <string>
#include <vector>

namespace hyperbound::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

struct CommandResult {
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// argv without the program name, e.g. {"bound", "certificate", "--n", "3", ...}.
CommandResult run(const std::vector<std::string>& argv);

}  // namespace hyperbound::cli
