#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qhall::cli {

/// Exit codes: 0 success, 1 a check failed, 2 malformed input, 3 cap exceeded.
enum ExitCode { kOk = 0, kFailed = 1, kBadInput = 2, kCapExceeded = 3 };

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

/// "3", "1..8" or "1,4,5".
std::vector<int> parse_range(const std::string& text);

}  // namespace qhall::cli
