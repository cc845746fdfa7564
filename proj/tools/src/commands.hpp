#pragma once

#include <iosfwd>

namespace qaoa::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kSchema = 2, kCap = 3 };

// Entry point shared by the binary and the in-process tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qaoa::cli
