#pragma once

// The ramsat command line: one entry point for every module.
//
// Exit status: 0 success, 1 bad arguments or unparsable input, 2 domain error
// (printed with its module-local name), 3 internal invariant violation.

#include <iosfwd>
#include <string>
#include <vector>

namespace ramsat {

inline constexpr int kSchemaVersion = 1;

/// Runs the CLI on args (without the program name), writing to out and err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace ramsat
