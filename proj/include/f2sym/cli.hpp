#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace f2sym {

enum ExitCode {
  kExitOk = 0,
  kExitSyntax = 1,
  kExitUnsupported = 2,
  kExitIo = 3,
  kExitEval = 4,
  kExitUsage = 64,
};

struct RunConfig {
  std::string input_path;
  std::string output_path;
  bool check_only = false;
  bool evaluate = false;
  bool normalize = false;
  bool strict_unbound = false;
};

/// Input path with its extension replaced by `.m`.
std::string default_output_path(const std::string& input);

/// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace f2sym
