#ifndef OSBORN_TOOLS_CLI_HPP
#define OSBORN_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace osborn::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kInputError = 2, kBoundError = 3 };

/// The whole command line tool; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace osborn::cli

#endif  // OSBORN_TOOLS_CLI_HPP
