#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ldstat::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kUnsafeRule = 3,
  kMismatch = 4,
  kUnsupported = 5,
};

struct Environment {
  /// Overrides the gn vocabulary base IRI (GN_BASE).
  std::optional<std::string> gn_base;
  /// Directory against which relative paths are resolved.
  std::filesystem::path cwd = std::filesystem::current_path();
};

/// Runs one command line (`args[0]` is the program name). Results go to `out`,
/// diagnostics to `err`; the return value is the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const Environment& env = {});

}  // namespace ldstat::cli
