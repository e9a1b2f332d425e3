#include "cpck/checker.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "cpck/errors.hpp"

namespace cpck {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Valid: return "valid";
    case Verdict::ValidWithHoles: return "valid_with_holes";
    case Verdict::Invalid: return "invalid";
    case Verdict::ParseFailure: return "parse_error";
  }
  return "?";
}

CheckReport check_proof(const ProofDag& proof, const CheckOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  CheckReport rep;
  rep.steps_total = proof.steps.size();

  std::unordered_map<std::string, TermPtr> concluded;
  concluded.reserve(proof.assumptions.size() + proof.steps.size());
  for (const auto& [id, formula] : proof.assumptions) concluded.emplace(id, formula);

  const RuleRegistry& registry = RuleRegistry::standard();
  std::vector<TermPtr> premises;
  for (const ProofStep& step : proof.steps) {
    premises.clear();
    premises.reserve(step.premises.size());
    for (const std::string& id : step.premises) premises.push_back(concluded.at(id));

    RuleResult failure;
    bool is_hole = false;
    if (step.rule == "hole") {
      if (opts.strict) {
        failure = RuleError{RuleErrorCode::HoleRejected, "holes are rejected in strict mode"};
      } else if (!step.premises.empty() || !step.args.empty()) {
        failure = RuleError{RuleErrorCode::BadArgument, "a hole states a bare conclusion"};
      } else {
        is_hole = true;
      }
    } else if (const RuleChecker* checker = registry.find(step.rule)) {
      failure = checker->check(premises, step.args, step.conclusion);
    } else if (opts.allow_holes) {
      is_hole = true;
    } else {
      failure = RuleError{RuleErrorCode::UnknownRule, step.rule};
    }

    // The claimed conclusion is registered either way so later steps can be
    // checked under keep_going.
    concluded.emplace(step.id, step.conclusion);
    if (failure) {
      rep.failures.push_back({step.id, std::move(*failure)});
      if (!opts.keep_going) break;
    } else if (is_hole) {
      ++rep.holes;
    } else {
      ++rep.steps_checked;
    }
  }

  if (!rep.failures.empty()) {
    rep.verdict = Verdict::Invalid;
  } else if (!proof.steps.empty() && !concluded.at(proof.final_step)->is_false()) {
    rep.verdict = Verdict::Invalid;
    rep.failures.push_back({proof.final_step,
                            RuleError{RuleErrorCode::ConclusionMismatch,
                                      "a refutation must conclude false"}});
  } else {
    rep.verdict = rep.holes ? Verdict::ValidWithHoles : Verdict::Valid;
  }

  rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

CheckReport check_files(const std::string& problem_path, const std::string& proof_path,
                        const CheckOptions& opts) {
  CheckReport rep;
  rep.file = proof_path;
  try {
    Script problem = parse_script(slurp(problem_path));
    ProofDag proof = parse_proof(slurp(proof_path), problem);
    rep = check_proof(proof, opts);
    rep.file = proof_path;
  } catch (const Error& e) {
    rep.verdict = Verdict::ParseFailure;
    rep.parse_message = e.what();
  }
  return rep;
}

int verdict_exit_code(Verdict v, const CheckOptions& opts) {
  switch (v) {
    case Verdict::Valid: return 0;
    case Verdict::ValidWithHoles: return opts.allow_holes ? 0 : 10;
    case Verdict::Invalid: return 20;
    case Verdict::ParseFailure: return 30;
  }
  return 30;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace cpck
