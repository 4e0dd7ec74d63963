#pragma once

#include <string>
#include <vector>

namespace cograte::cli {

/// Runs one CLI invocation. Returns the process exit code:
///   0 success, 2 argument error (usage on stderr), 3 numerical failure.
int run(int argc, const char* const* argv);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args);

}  // namespace cograte::cli
