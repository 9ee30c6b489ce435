#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace confpair::cli {

enum ExitCode : int { ok = 0, parse_error = 1, validation_error = 2, verification_failure = 3 };

// Runs one command. argv[0] is the program name. Results go to `out`,
// diagnostics to `err`; inputs not given as flags are read from `in`.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace confpair::cli
