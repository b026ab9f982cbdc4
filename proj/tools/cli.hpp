#ifndef COMPSERIES_CLI_HPP
#define COMPSERIES_CLI_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace compseries::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_failure = 1,
  exit_parse = 2,
  exit_mismatch = 3,
  exit_capacity = 4,
  exit_violation = 5,
};

/// Values normally read from the process environment.
struct Environment {
  std::optional<std::string> cache_dir;
  std::optional<std::string> element_cap;

  static Environment from_process();
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env = Environment::from_process());

} // namespace compseries::cli

#endif // COMPSERIES_CLI_HPP
