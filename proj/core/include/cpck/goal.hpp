#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cpck/smtlib.hpp"
#include "cpck/term.hpp"

namespace cpck {

// A proof goal: sort parameters, a signature, named hypotheses and one
// conclusion.  Input grammar, one form per top-level s-expression:
//
//   (sort NAME [:nonempty])
//   (const NAME SORT)           ; SORT may be Nat
//   (fun NAME (SORT+) SORT)     ; Nat is not allowed in function signatures
//   (hyp NAME term)
//   (goal term)                 ; exactly once
//
// Terms may use `iff` and Nat-sorted binders; `preprocess` removes both.

struct SortParam {
  std::string name;
  bool nonempty = false;
};

struct Hypothesis {
  std::string name;
  TermPtr formula;
};

struct Goal {
  std::vector<SortParam> sorts;
  std::vector<ConstDecl> consts;
  std::vector<FunSigPtr> funs;
  std::vector<Hypothesis> hypotheses;
  TermPtr conclusion;

  // Symbol environment over the goal's declarations.
  Signature signature() const;
};

Goal parse_goal(std::string_view input);

// One logged preprocessing change.  `before` is null for added hypotheses.
struct Rewrite {
  TermPtr before;
  TermPtr after;
  std::string reason;
};

struct PreprocessResult {
  Goal goal;
  std::vector<Rewrite> rewrites;
};

// Rewrites the goal into the solver-facing fragment:
//   - iff becomes equality on Bool,
//   - Nat constants are relaxed to Int with an appended (<= 0 n) hypothesis,
//   - Nat binders are relaxed to Int with the guard as an implication in the
//     body.
// Subtraction, division and negation applied to Nat-valued operands have no
// faithful relaxation and throw UnsupportedConstruct.  Idempotent: running it
// on its own output logs no rewrites.
PreprocessResult preprocess(const Goal& g);

// Why a declared sort is known to be inhabited in the translation.
enum class WitnessStatus { WitnessConst, DeclaredNonempty, NotQuantified };

struct SortObligation {
  std::string sort;
  WitnessStatus status;
  std::string witness;  // WitnessConst: the constant's name
};

struct TranslateResult {
  Script script;
  std::vector<SortObligation> obligations;
};

// Builds the refutation script: declarations in order, hypotheses asserted,
// conclusion asserted negated (a Bool equality becomes `distinct`), then
// (check-sat).  The goal must already be preprocessed; leftover iff or Nat
// throws UnsupportedConstruct.  Every declared sort must be inhabited —
// a sort that is quantified over but has no witness constant and no
// :nonempty flag throws EmptySortRisk.
TranslateResult translate(const Goal& g);

}  // namespace cpck
