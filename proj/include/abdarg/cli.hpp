#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace abdarg {

// Runs one CLI invocation (arguments without the program name) against the
// given streams.  Exit status: 0 success, 1 empty answer (no explanation,
// no consequence, argument not accepted), 2 input or usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace abdarg
