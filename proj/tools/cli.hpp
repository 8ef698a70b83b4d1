#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permpat::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInputError = 2, kBudgetExceeded = 3 };

inline constexpr const char* kCacheEnv = "PERMPAT_CACHE_DIR";

/// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permpat::cli
