#include "cpck/proof.hpp"

#include <cctype>
#include <set>
#include <unordered_set>

namespace cpck {

namespace {

bool valid_id(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.') return false;
  }
  return true;
}

class ProofParser {
public:
  ProofParser(const Script& problem) : problem_(problem), sig_(problem.signature()) {}

  ProofDag run(std::string_view input) {
    bool steps_started = false;
    for (const SExpr& e : read_sexprs(input)) {
      if (!e.is_list() || e.items.empty() || e.items[0].type != SExpr::Type::Symbol) {
        throw ParseError(e.line, e.col, "expected (assume ...) or (step ...)");
      }
      const std::string& head = e.items[0].text;
      if (head == "assume") {
        if (steps_started) {
          throw ParseError(e.line, e.col, "assumptions must precede all steps");
        }
        parse_assume(e);
      } else if (head == "step") {
        steps_started = true;
        parse_step(e);
      } else {
        throw ParseError(e.line, e.col, "expected (assume ...) or (step ...)");
      }
    }
    if (dag_.steps.empty()) {
      throw ParseError(1, 0, "proof has no steps");
    }
    dag_.final_step = dag_.steps.back().id;
    return std::move(dag_);
  }

private:
  std::string parse_id(const SExpr& e) {
    if (e.type != SExpr::Type::Symbol || !valid_id(e.text)) {
      throw ParseError(e.line, e.col, "invalid identifier");
    }
    if (known_ids_.count(e.text)) {
      throw ParseError(e.line, e.col, "duplicate identifier '" + e.text + "'");
    }
    return e.text;
  }

  TermPtr parse_formula(const SExpr& e) {
    TermPtr t = parse_term(e, sig_);
    Sort s = well_sorted(t);
    if (!s.is_bool()) {
      throw ParseError(e.line, e.col, "conclusion has sort " + s.to_string() + ", expected Bool");
    }
    return t;
  }

  void parse_assume(const SExpr& e) {
    if (e.items.size() != 3) {
      throw ParseError(e.line, e.col, "assume takes an identifier and a term");
    }
    std::string id = parse_id(e.items[1]);
    TermPtr t = parse_formula(e.items[2]);
    if (asserted_.empty() && !problem_.assertions.empty()) {
      asserted_.insert(problem_.assertions.begin(), problem_.assertions.end());
    }
    if (!asserted_.count(t)) throw AssumeMismatch(e.items[2].line, e.items[2].col, id);
    known_ids_.insert(id);
    dag_.assumptions.emplace_back(std::move(id), std::move(t));
  }

  void parse_step(const SExpr& e) {
    if (e.items.size() < 5) {
      throw ParseError(e.line, e.col, "step takes an identifier, a term and :rule");
    }
    ProofStep step;
    step.id = parse_id(e.items[1]);
    step.conclusion = parse_formula(e.items[2]);

    std::size_t i = 3;
    if (e.items[i].type != SExpr::Type::Keyword || e.items[i].text != "rule") {
      throw ParseError(e.items[i].line, e.items[i].col, "expected :rule");
    }
    ++i;
    if (e.items[i].type != SExpr::Type::Symbol) {
      throw ParseError(e.items[i].line, e.items[i].col, "expected a rule name after :rule");
    }
    step.rule = e.items[i].text;
    ++i;

    if (i < e.items.size() && e.items[i].type == SExpr::Type::Keyword &&
        e.items[i].text == "premises") {
      ++i;
      if (i >= e.items.size() || !e.items[i].is_list() || e.items[i].items.empty()) {
        throw ParseError(e.items[i - 1].line, e.items[i - 1].col,
                         ":premises takes a nonempty id list");
      }
      for (const SExpr& p : e.items[i].items) {
        if (p.type != SExpr::Type::Symbol) {
          throw ParseError(p.line, p.col, "premise must be an identifier");
        }
        if (!known_ids_.count(p.text)) throw UnknownPremise(p.line, p.col, p.text);
        step.premises.push_back(p.text);
      }
      ++i;
    }

    if (i < e.items.size() && e.items[i].type == SExpr::Type::Keyword && e.items[i].text == "args") {
      ++i;
      if (i >= e.items.size() || !e.items[i].is_list() || e.items[i].items.empty()) {
        throw ParseError(e.items[i - 1].line, e.items[i - 1].col, ":args takes a nonempty list");
      }
      for (const SExpr& a : e.items[i].items) step.args.push_back(parse_arg(a));
      ++i;
    }

    if (i != e.items.size()) {
      throw ParseError(e.items[i].line, e.items[i].col,
                       e.items[i].type == SExpr::Type::Keyword &&
                               (e.items[i].text == "premises" || e.items[i].text == "args")
                           ? ":premises and :args must appear in that order, once each"
                           : "unexpected trailing content in step");
    }

    known_ids_.insert(step.id);
    dag_.steps.push_back(std::move(step));
  }

  ProofArg parse_arg(const SExpr& e) {
    // Bare integers and (/ a b) quotients are numeric arguments; a leading
    // minus keeps them numeric.  Anything else is a term over the problem's
    // symbols.
    if (e.type == SExpr::Type::Numeral) return BigInt(e.text);
    if (e.is_list() && e.items.size() == 2 && e.items[0].is_symbol("-") &&
        e.items[1].type == SExpr::Type::Numeral) {
      return BigInt(-BigInt(e.items[1].text));
    }
    if (e.is_list() && e.items.size() == 3 && e.items[0].is_symbol("/")) {
      auto as_int = [](const SExpr& x) -> std::optional<BigInt> {
        if (x.type == SExpr::Type::Numeral) return BigInt(x.text);
        if (x.is_list() && x.items.size() == 2 && x.items[0].is_symbol("-") &&
            x.items[1].type == SExpr::Type::Numeral) {
          return BigInt(-BigInt(x.items[1].text));
        }
        return std::nullopt;
      };
      auto num = as_int(e.items[1]);
      auto den = as_int(e.items[2]);
      if (num && den) {
        if (*den == 0) throw ParseError(e.line, e.col, "rational argument with denominator 0");
        return Rat(*num, *den);
      }
    }
    TermPtr t = parse_term(e, sig_);
    well_sorted(t);  // any sort is fine for a term argument, but it must have one
    return t;
  }

  const Script& problem_;
  Signature sig_;
  ProofDag dag_;
  std::set<std::string> known_ids_;
  std::unordered_set<TermPtr, TermHash, TermEq> asserted_;  // built on first assume
};

}  // namespace

ProofDag parse_proof(std::string_view input, const Script& problem) {
  return ProofParser(problem).run(input);
}

}  // namespace cpck
