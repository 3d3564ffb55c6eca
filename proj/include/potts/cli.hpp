#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace potts::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kUsage = 2,
    kBudget = 3,
    kOracle = 4,
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace potts::cli
