#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cpck/smtlib.hpp"
#include "cpck/term.hpp"

namespace cpck {

// Step arguments: a term, an integer, or a rational.  Bare numerals come in
// as BigInt, (/ a b) as Rat, everything else (including true/false) as terms.
using ProofArg = std::variant<TermPtr, BigInt, Rat>;

struct ProofStep {
  std::string id;
  std::string rule;
  std::vector<std::string> premises;
  std::vector<ProofArg> args;
  TermPtr conclusion;
};

// A parsed proof: assumptions (each matching an assertion of the problem)
// followed by steps whose premises reference earlier ids only.  `final_step`
// is the id of the last step; a refutation must conclude `false` there.
struct ProofDag {
  std::vector<std::pair<std::string, TermPtr>> assumptions;
  std::vector<ProofStep> steps;
  std::string final_step;
};

// Parses a proof against a problem script.  Terms are parsed over the
// script's declarations.  Throws ParseError (including the UnknownPremise and
// AssumeMismatch refinements) and SortError.
ProofDag parse_proof(std::string_view input, const Script& problem);

}  // namespace cpck
