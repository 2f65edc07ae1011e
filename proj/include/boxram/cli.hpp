#pragma once

// The `boxram` command line: verb-style subcommands with JSON reports.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace boxram {

namespace exit_code {
constexpr int ok = 0;
constexpr int domain_error = 1;
constexpr int budget_exceeded = 2;
}  // namespace exit_code

/// FNV-1a, 64 bit.
std::uint64_t fnv1a64(const std::string& bytes);

/// Runs one command (args exclude the program name). The JSON report goes to
/// `out` unless --out names a file; diagnostics and usage go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace boxram
