#include <cstdio>

#include "tempop/cli.hpp"

int main(int argc, char** argv) {
  const auto result = tempop::cli::run({argv + 1, argv + argc});
  if (!result.output.empty())
    std::fwrite(result.output.data(), 1, result.output.size(), stdout);
  if (!result.diagnostics.empty())
    std::fwrite(result.diagnostics.data(), 1, result.diagnostics.size(), stderr);
  return result.exit_code;
}
