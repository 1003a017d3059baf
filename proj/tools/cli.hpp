#pragma once

#include <ostream>

namespace braidsc::cli {

enum ExitCode { ok = 0, usage = 1, budget = 2, verification = 3 };

/// Runs one command line; machine output goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace braidsc::cli
