#ifndef BKPVC_CLI_HPP
#define BKPVC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "bkpvc/cover.hpp"

namespace bkpvc {

// Exit statuses of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_semantic_failure = 1;  // violation, not a cover, bound violated
inline constexpr int exit_usage = 2;             // bad arguments or input files

/// "3,5,8", "" (empty set) or "@path" naming a file with either a JSON array
/// or comma/whitespace separated ids. Throws Error(ParseError).
CoverSet parse_cover(const std::string& text);

/// Runs `bkpvc <subcommand> ...`; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bkpvc

#endif
