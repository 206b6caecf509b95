// Command-line front end. run_cli is the whole program minus process
// plumbing, so tests can drive it directly.
#ifndef QUATCY_TOOLS_CLI_HPP
#define QUATCY_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace quatcy::cli {

enum ExitCode : int {
  kCertified = 0,
  kRefuted = 1,
  kUsage = 2,
  kInconclusive = 3,
};

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quatcy::cli

#endif  // QUATCY_TOOLS_CLI_HPP
