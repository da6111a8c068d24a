#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mexq::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Output goes to `out`
// unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace mexq::cli
