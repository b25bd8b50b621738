#ifndef NILREP_CLI_HPP
#define NILREP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace nilrep::cli {

enum ExitCode : int { Ok = 0, Mismatch = 1, Usage = 2 };

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nilrep::cli

#endif
