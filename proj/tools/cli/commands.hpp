#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pcore::cli {

enum ExitCode : int {
    kPass = 0,
    kFail = 1,
    kInputError = 2,
    kNoInverse = 3,
    kHypothesesNotMet = 4,
    kGeneratorIntegrity = 5,
};

/// Parses argv and runs one subcommand: compute, verify, fuzz, generate,
/// example-3-3. The JSON report goes to `out`, diagnostics to `err`.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace pcore::cli
