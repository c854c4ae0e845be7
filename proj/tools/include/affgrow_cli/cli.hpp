#ifndef AFFGROW_CLI_CLI_HPP_
#define AFFGROW_CLI_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace affgrow::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kUnknown = 2 };

// args excludes the program name. Artifacts go to `out` (or --out), and
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace affgrow::cli

#endif  // AFFGROW_CLI_CLI_HPP_
