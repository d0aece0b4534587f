#pragma once

#include <string>
#include <vector>

namespace poisson {

// Command-line dispatch over all module operations. Arguments exclude the
// program name. Writes one JSON document to standard output (or to the file
// named by --out): {"status", "payload", "diagnostics"}. Commands reading an
// algebra accept either the bare algebra JSON or a whole result envelope, so
// commands compose by piping. Returns the process exit code: 0 success,
// 1 input or precondition error, 2 broken internal invariant.
int run_cli(const std::vector<std::string>& args);
int run_cli(int argc, const char* const* argv);

}  // namespace poisson
