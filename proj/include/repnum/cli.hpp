#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace repnum::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kIoError = 1;
inline constexpr int kContractError = 2;
inline constexpr int kClaimFailed = 3;

// Runs one command line (args excludes the program name). The JSON
// report goes to `out`, diagnostics and summaries to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace repnum::cli
