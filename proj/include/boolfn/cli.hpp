#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace boolfn::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCostGuard = 3;

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` (or --out FILE), diagnostics to `err` as a single line. Nothing is
/// written to `out` unless the whole report was produced.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "1,2,4" -> {1, 2, 4}. Throws FormatError.
std::vector<double> parse_real_list(const std::string& text);

/// "6..14" (inclusive) or "6,8,10". Throws FormatError.
std::vector<int> parse_m_range(const std::string& text);

}  // namespace boolfn::cli
