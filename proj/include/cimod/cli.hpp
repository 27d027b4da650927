#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cimod::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kValidation = 2,
    kDomainExclusion = 3,
    kBudget = 4,
};

// Runs one command line (without the program name). JSON results go to `out`,
// diagnostics and progress to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cimod::cli
