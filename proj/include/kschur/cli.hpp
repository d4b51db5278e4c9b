#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kschur::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kNumeric = 3, kInternal = 4 };

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Text printed by `phi --k K --symbolic` (matrix in printed orientation and Ξ).
std::string phi_pretty(int k);

/// Compares phi_pretty(2), phi_pretty(3) with the embedded golden files.
bool selftest(std::ostream& out);

}  // namespace kschur::cli
