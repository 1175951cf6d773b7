#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nf::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kResource = 3,
};

// Runs one subcommand. `args` excludes the program name. Results go to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nf::cli
