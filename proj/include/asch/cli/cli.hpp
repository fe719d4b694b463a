#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "asch/error.hpp"

namespace asch {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse = 2;
inline constexpr int infeasible = 3;
inline constexpr int case_mismatch = 4;
inline constexpr int not_qpg = 5;
inline constexpr int not_scheme = 6;
inline constexpr int unsupported = 7;
inline constexpr int refused = 8;
inline constexpr int usage = 64;
inline constexpr int invariant = 70;
}  // namespace exit_code

int exit_code_for(ErrorKind kind);

// Subcommands params, feas, embed, case, construct. args excludes the program
// name. Reports go to out, diagnostics to err; returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// One array per line; blank lines and lines starting with '#' are skipped.
// ErrorKind::parse names the offending line.
struct ArrayLine {
  int line = 0;
  std::string text;
};
std::vector<ArrayLine> read_array_lines(std::istream& in);

}  // namespace asch
