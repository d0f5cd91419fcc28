#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schurlab::cli {

enum ExitCode : int { kOk = 0, kAssertion = 1, kUsage = 2, kBudget = 3 };

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kArtifactVersion = "0.1.0";

/// Runs one command line (without the program name), writing results to
/// out and diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schurlab::cli
