#pragma once

// Batch driver behind the qtorus executable. Takes a JSON job spec and
// returns the rendered report together with the process exit code.

#include <cstdint>
#include <string>
#include <string_view>

namespace qtorus::cli {

enum ExitCode : int {
  Ok = 0,
  ValidationFailure = 2,
  InternalFailure = 3,
};

inline constexpr std::uint64_t default_seed = 20240601;

struct RunOptions {
  std::string format = "json";  // json | text
  std::uint64_t seed = default_seed;
  unsigned threads = 1;
};

struct RunResult {
  std::string output;
  int exit_code = Ok;
};

/// task is one of local, surface, global, bunt, selfcheck. selfcheck ignores
/// the input text.
RunResult run(std::string_view task, std::string_view input, const RunOptions& options = {});

}  // namespace qtorus::cli
