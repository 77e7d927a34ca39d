#pragma once
// Command-line front end: subcommand dispatch and report formatting.
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace monopole_lab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitToleranceBreach = 1;
inline constexpr int kExitUsage = 2;

/// Name of the pseudo-random generator used by randomized sweeps.
inline constexpr const char* kRngName = "mt19937_64";

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Serializes JSON with every floating-point number printed to 17 significant digits.
std::string dump17(const nlohmann::ordered_json& j);

/// Formats a double to 17 significant digits (non-finite values as nan/inf).
std::string format17(double x);

}  // namespace monopole_lab::cli
