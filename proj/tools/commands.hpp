#pragma once

// Batch command surface of the gtsh tool. `run` is pure with respect to its
// config: it returns the serialized report instead of printing it, so tests
// can drive every command in-process.

#include <optional>
#include <string>
#include <vector>

#include "gtsh/arith.hpp"

namespace gtsh::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsageError = 2 };

struct CommandConfig {
  std::string command;
  std::optional<Int> n;
  std::optional<Int> q;
  std::optional<Int> alpha;
  std::optional<std::string> a;  // shadow coordinates "m,k"
  std::optional<std::string> b;
  std::optional<Int> m;
  std::optional<Int> k;
  std::optional<std::string> format;  // "json" or "csv"; default depends on the command
  Int bound = 24;
  bool check = false;
};

struct RunResult {
  int exit_code = kOk;
  std::string output;  // report, newline-terminated
  std::string error;   // diagnostic for exit codes != 0
};

RunResult run(const CommandConfig& config);

const std::vector<std::string>& command_names();

/// Parses `m,k`. Throws std::invalid_argument on malformed input.
std::pair<Int, Int> parse_coordinates(const std::string& text);

struct CheckOutcome {
  std::string name;
  bool passed;
  std::string detail;
};

/// Every invariant applicable at modulus n, stopping at the first failure.
std::vector<CheckOutcome> verify_all(Int n, Int bound);

}  // namespace gtsh::cli
