#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace affbraid::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kTrue = 0,       // success, or a predicate that holds
  kFalse = 1,      // predicate fails, or search found nothing
  kUsage = 2,      // malformed word, bad flag, wrong group for the verb
  kResource = 3,   // a length, strand or depth budget was exceeded
  kInternal = 4,   // an internal consistency check failed
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace affbraid::cli
