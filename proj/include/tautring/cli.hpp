#pragma once

// Batch command-line front end. Every verification is a subcommand; output
// is markdown, JSON or CSV.

#include <iosfwd>
#include <string>
#include <vector>

namespace tautring::cli {

enum ExitCode : int { kPass = 0, kMismatch = 1, kUsage = 2 };

/// args excludes the program name. Report goes to `out` (or the file given
/// with -o), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace tautring::cli
