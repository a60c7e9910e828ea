#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace subchi::cli {

enum ExitCode : int {
    kOk = 0,
    kVerificationFailure = 1,
    kUsage = 2,
    kResource = 3,
};

// Runs one command line (without the program name). Reports go to `out`;
// errors go to `err` as a single "error[<kind>]: <message>" line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subchi::cli
