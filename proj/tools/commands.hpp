#ifndef CHAINPAIR_TOOLS_COMMANDS_HPP
#define CHAINPAIR_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace chainpair::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kYes = 0, kNo = 1, kError = 2 };

/// Runs one CLI invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "1,2,3" -> {1, 2, 3}; throws std::invalid_argument unless every entry is a positive integer.
std::vector<int> parse_set(const std::string& text);

}  // namespace chainpair::cli

#endif  // CHAINPAIR_TOOLS_COMMANDS_HPP
