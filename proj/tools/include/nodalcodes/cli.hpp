#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace nodalcodes::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidData = 2,
  kVerificationFailed = 3,
};

struct CommandResult {
  int exit_code = kOk;
  /// Human-readable report (stdout).
  std::string text;
  /// Present when --json was requested and the command produced a payload.
  std::optional<nlohmann::json> json;
  /// Diagnostics (stderr).
  std::string error;
};

/// Runs one invocation. `args` excludes the program name.
CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace nodalcodes::cli
