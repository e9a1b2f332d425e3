#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpck/proof.hpp"
#include "cpck/rules.hpp"

namespace cpck {

enum class Verdict { Valid, ValidWithHoles, Invalid, ParseFailure };

// "valid", "valid_with_holes", "invalid", "parse_error"
const char* verdict_name(Verdict v);

struct StepFailure {
  std::string step_id;
  RuleError error;
};

struct CheckReport {
  std::string file;
  std::size_t steps_total = 0;
  std::size_t steps_checked = 0;  // non-hole steps that passed their rule check
  std::size_t holes = 0;
  Verdict verdict = Verdict::Invalid;
  std::vector<StepFailure> failures;
  std::int64_t wall_ms = 0;
  std::string parse_message;  // Verdict::ParseFailure only
};

struct CheckOptions {
  bool strict = false;       // reject holes outright
  bool allow_holes = false;  // exit 0 despite holes; unknown rules become holes
  bool keep_going = false;   // report every failing step instead of the first
};

// Checks every step of the proof against the rule registry.  A `hole` step is
// counted, not checked.  The verdict is `valid` when every step checks and
// the final step concludes `false`; holes downgrade it to `valid_with_holes`;
// any failing step (or a final step that does not conclude `false`) makes it
// `invalid`.  Checking stops at the first failure unless keep_going is set.
CheckReport check_proof(const ProofDag& proof, const CheckOptions& opts = {});

// Reads, parses and checks a problem/proof file pair.  Parse and sort errors
// become a ParseFailure report instead of an exception.
CheckReport check_files(const std::string& problem_path, const std::string& proof_path,
                        const CheckOptions& opts = {});

// valid -> 0; valid_with_holes -> 10 (0 with allow_holes); invalid -> 20;
// parse_error -> 30.
int verdict_exit_code(Verdict v, const CheckOptions& opts);

// Whole file as a string; throws Error when unreadable.
std::string slurp(const std::string& path);

}  // namespace cpck
