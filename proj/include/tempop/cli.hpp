#pragma once

#include <string>
#include <vector>

namespace tempop::cli {

// Exit codes: 0 success, 1 usage/parse error, 2 domain or validation error,
// 3 numerical failure (quadrature or inversion did not converge).
struct RunResult {
  int exit_code = 0;
  std::string output;       // the complete emitted document (empty if --out consumed it)
  std::string diagnostics;  // human-readable messages for stderr
};

// Parses and runs one subcommand. The document is always assembled in full
// before anything is written, so error paths never leave partial output.
// When --out names a relative path and TEMPOP_OUT_DIR is set, the file goes
// under that directory.
RunResult run(const std::vector<std::string>& args);

}  // namespace tempop::cli
