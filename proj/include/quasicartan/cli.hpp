#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quasicartan::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    affirmative = 0,
    negative = 1,
    usage_error = 2,
    undecided = 3,
};

/// Entry point of the quasicartan tool. args excludes the program name;
/// FILE "-" reads from in.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace quasicartan::cli
