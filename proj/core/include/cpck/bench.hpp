#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpck/checker.hpp"

namespace cpck {

// One problem/proof pair's outcome.  `file` is the problem file's base name.
struct BenchRow {
  std::string file;
  std::size_t steps_total = 0;
  std::size_t steps_checked = 0;
  std::size_t holes = 0;
  std::string verdict;  // checker verdict, or "solver_error"
  std::int64_t solver_ms = 0;
  std::int64_t check_ms = 0;
};

struct BenchOptions {
  int jobs = 1;
  std::string solver_cmd;  // empty: checking only, solver_ms stays 0
  int timeout_sec = -1;
  CheckOptions check;
};

// Checks every *.smt2 file in dir that has a sibling *.cpcs proof, in file
// name order.  With a solver command, each problem is also solved and the
// solver wall time recorded; a solver failure turns the row's verdict into
// "solver_error".  Parse failures become ordinary rows with verdict
// "parse_error".  jobs > 1 runs files concurrently.
std::vector<BenchRow> bench_dir(const std::string& dir, const BenchOptions& opts = {});

// CSV with the fixed header
//   file,steps_total,steps_checked,holes,verdict,solver_ms,check_ms
std::string bench_csv(const std::vector<BenchRow>& rows);

// Cumulative-time listing over the successfully checked rows, sorted by
// per-file total time: "k cumulative_ms file", one row per line, ready to
// plot as a cactus.
std::string bench_cactus(const std::vector<BenchRow>& rows);

}  // namespace cpck
