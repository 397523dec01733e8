#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qfree::cli {

/// Exit codes of `run`.
enum Exit : int {
    ok = 0,
    usage = 1,
    domain = 2,
    budget = 3,  // also precision, search cap and short enumerations
    internal = 4,
    verify_failed = 5,
};

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qfree::cli
