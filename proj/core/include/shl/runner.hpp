#pragma once

#include <cstddef>
#include <string>

#include "shl/tables.hpp"

namespace shl {

enum class Command { ComputeR, ComputeRbar, ComputeProlong, ComputeWeak, CheckBerger, VerifyTable };
const char* to_string(Command c);

struct TaskSpec {
  Command command = Command::ComputeR;
  // Catalog spec or path to an algebra JSON file (compute-* and check-berger).
  std::string algebra;
  // "sym" | "skew" for compute-prolong, "eta" | "omega" for compute-weak.
  std::string kind;
  int table = 0;
  std::string grid;  // empty: default_grid_path()
  std::size_t max_size = 0;
  std::size_t jobs = 1;
  bool timings = true;
  bool properties = true;
};

enum ExitCode { kExitOk = 0, kExitMismatch = 1, kExitInput = 2, kExitCeiling = 3 };

struct RunResult {
  int exit_code = kExitOk;
  std::string report;  // JSON, sorted keys, trailing newline
};

// Never throws for bad input: errors become part of the report and set the
// exit code.
RunResult run(const TaskSpec& task);

// Catalog spec or JSON file; a path wins when the file exists.
RepPtr load_rep(const std::string& algebra, std::size_t max_size);

}  // namespace shl
