// Command-line front end.  run_cli is the whole program minus argv
// unpacking, factored out so the test suite can drive it in-process.
//
// Exit codes:
//   0 — computed / verified,
//   2 — a counterexample or an exploratory inequality was found,
//   1 — usage or validation error (diagnostics on the error stream).
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace orbidual {

// args excludes the program name.  Writes results to `out`, diagnostics
// to `err`.  Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orbidual
