#ifndef CUBEKAPPA_CLI_HPP
#define CUBEKAPPA_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cubekappa {

/// Exit codes of the command-line front end.
inline constexpr int kExitSuccess = 0;       // pass / value computed
inline constexpr int kExitViolation = 1;     // a verified claim failed
inline constexpr int kExitUsage = 2;         // bad flags or parameters
inline constexpr int kExitInconclusive = 3;  // a work budget tripped

/// Runs one subcommand (build | kappa | extra | construct | verify | export |
/// cache) and writes the serialized task record to `out`. Usage errors print
/// to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

} // namespace cubekappa

#endif
