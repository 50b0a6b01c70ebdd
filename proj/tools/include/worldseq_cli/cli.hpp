#pragma once

#include <iosfwd>

namespace worldseq::cli {

enum ExitCode : int {
  kOk = 0,
  kNegative = 1,  // no extension, no expansion, inconsistent KB, threshold or check failure
  kParseError = 2,
  kUsageError = 3,  // bad arguments, unreadable files, exceeded caps
};

/// Runs the worldseq command line. argv[0] is the program name.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace worldseq::cli
