#ifndef MONKEY_TOOLS_CLI_HPP
#define MONKEY_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace monkey::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kValidation = 2,
  kResource = 3,
  kIo = 4,
};

/// Runs one monkeyzipf command. `args` excludes the program name. Results go to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monkey::cli

#endif  // MONKEY_TOOLS_CLI_HPP
