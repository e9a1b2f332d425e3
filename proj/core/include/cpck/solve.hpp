#pragma once

#include <cstdint>
#include <string>

#include "cpck/smtlib.hpp"

namespace cpck {

enum class SolveStatus { Unsat, Sat, Unknown, Timeout };

// "unsat", "sat", "unknown", "timeout"
const char* solve_status_name(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::Unknown;
  std::string proof_text;  // whatever the solver printed after its status line
  std::int64_t wall_ms = 0;
};

// Writes the problem to a temporary file and runs `command` on it through the
// shell.  Every "{file}" in the command is replaced by the temp file path; a
// command without the placeholder gets the path appended.  The first
// non-empty stdout line must be unsat/sat/unknown; the rest is returned as
// proof_text.  timeout_sec < 0 means no limit; 0 times out immediately.  The
// solver's process group is killed on timeout.  Throws SolverSpawnError when
// the command cannot run and SolverOutputUnparsable when the output has no
// status line.
SolveResult solve_external(const Script& problem, const std::string& command, int timeout_sec = -1);

}  // namespace cpck
