#pragma once

#include <ostream>

namespace pgcert::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,             // bad arguments, IO failure, group too large
  kInvalidInput = 2,      // malformed or inconsistent presentation
  kTheoremViolation = 3,  // a claimed property failed on a REMARK group
  kManifestMismatch = 4,  // audit only: route differs from manifest.tsv
};

/// Entry point of the pgcert tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pgcert::cli
