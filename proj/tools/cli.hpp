#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mzlab::cli {

/// Exit codes of run_command.
enum Exit : int {
    ok = 0,        ///< success, or a positive answer
    negative = 1,  ///< a well-posed question with a negative answer
    usage = 2,     ///< bad arguments, unparsable input, precondition violations
};

/// Runs one subcommand. `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mzlab::cli
