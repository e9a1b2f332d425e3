#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cpck/poly.hpp"
#include "cpck/proof.hpp"
#include "cpck/term.hpp"

namespace cpck {

enum class RuleErrorCode {
  PivotNotFound,
  ConclusionMismatch,
  EmptyPremises,
  ArityMismatch,
  NotAnEquality,
  UnsupportedConstruct,
  NormalFormMismatch,
  PremiseShape,
  BadArgument,
  UnknownRule,
  HoleRejected,
};

const char* rule_error_name(RuleErrorCode code);

struct RuleError {
  RuleErrorCode code;
  std::string detail;

  std::string to_string() const {
    return detail.empty() ? rule_error_name(code)
                          : std::string(rule_error_name(code)) + ": " + detail;
  }
};

// nullopt means the step checks.
using RuleResult = std::optional<RuleError>;

// --- individual rule checks -----------------------------------------------------

// Binary resolution on the n-ary clause view.  pol=true: the pivot occurs
// positively in c1 and negated in c2; pol=false: the mirror image.  The FIRST
// matching occurrence is erased on each side; duplicates and order survive.
RuleResult check_resolution(const ClauseView& c1, const ClauseView& c2, bool pol,
                            const TermPtr& pivot, const ClauseView& claimed);

// One premise of the bound-summation rule: lhs rel rhs with rel in {<, <=, =}
// over a single arithmetic carrier.
struct RelChain {
  Op rel;  // Lt, Le or Eq
  TermPtr lhs;
  TermPtr rhs;
  Sort carrier;
};

// Reads a premise term as a RelChain; nullopt when it is not an arithmetic
// <, <= or = between same-carrier operands.
std::optional<RelChain> premise_to_rel_chain(const TermPtr& premise);

// Sums a chain of upper bounds.  The result relation is < if any premise is <
// and <= otherwise (equalities only weaken to <=).  When any premise has a
// Real carrier, every operand of the Int-carrier premises is lifted wholesale
// under to_real.  Sums are left-associated in premise order; a single premise
// contributes its sides unchanged.  The claimed conclusion must match
// syntactically.
RuleResult check_sum_ub(const std::vector<RelChain>& premises, const TermPtr& claimed);

// Tangent-plane bound for a product of reals at the point (a, b), with
// tplane = b*x + a*y - a*b:
//   sigma=true:  (x*y <= tplane) = ((x<=a and y>=b) or (x>=a and y<=b))
//   sigma=false: (x*y >= tplane) = ((x<=a and y<=b) or (x>=a and y>=b))
// The >= forms are the usual normalized <=; the claimed conclusion is
// compared after AC-flattening of +/* chains, so any association of the
// tangent-plane sum is accepted.
RuleResult check_mult_tangent(const TermPtr& x, const TermPtr& y, const Rat& a, const Rat& b,
                              bool sigma, const TermPtr& claimed);

// claimed must be an equality of arithmetic terms whose two sides share a
// canonical polynomial normal form (associativity, commutativity and
// distributivity).
RuleResult check_poly_norm(const TermPtr& claimed);

// claimed must be an equality whose sides agree after flattening +/* chains
// and sorting operands — no distributivity.
RuleResult check_ac_norm(const TermPtr& claimed);

// The structural rules: assume_elim, refl, symm, trans, cong, eq_resolve,
// not_not_elim, contra, and_elim, or_intro, equiv_elim1, equiv_elim2.
RuleResult check_structural(const std::string& rule, const std::vector<TermPtr>& premises,
                            const std::vector<ProofArg>& args, const TermPtr& claimed);

// --- helpers shared with the checkers ---------------------------------------------

// AC normal form: every + and * chain is flattened (through either operand)
// and its operands sorted by the fixed total term order, then rebuilt
// left-associated.  All other structure is preserved.
TermPtr ac_canon(const TermPtr& t);

// Interns opaque arithmetic leaves (variables, function applications) into
// the two variable index spaces used by the polynomial reflection.
// Structurally equal leaves share an index.
class VarIntern {
public:
  // t must have an arithmetic sort; base Int goes to the integer space, Real
  // to the real space.
  ArithPtr leaf(const TermPtr& t, const Sort& sort);

  std::size_t int_count() const { return ints_.size(); }
  std::size_t real_count() const { return reals_.size(); }

private:
  std::unordered_map<TermPtr, std::uint32_t, TermHash, TermEq> ints_;
  std::unordered_map<TermPtr, std::uint32_t, TermHash, TermEq> reals_;
};

// Reflects an arithmetic term into an ArithExpr, interning non-arithmetic
// subterms as variables.  Throws UnsupportedConstruct for terms outside the
// fragment (e.g. division by a non-constant).
ArithPtr term_to_arith(const TermPtr& t, VarIntern& vars);

// --- registry -------------------------------------------------------------------

struct RuleChecker {
  std::string name;
  RuleResult (*check)(const std::vector<TermPtr>& premises, const std::vector<ProofArg>& args,
                      const TermPtr& claimed);
};

// Immutable table of every checkable rule.  `hole` is not in the table; the
// proof checker handles it (count, don't check).
class RuleRegistry {
public:
  static const RuleRegistry& standard();

  const RuleChecker* find(const std::string& name) const;
  std::vector<std::string> names() const;

private:
  RuleRegistry();
  std::vector<RuleChecker> checkers_;
};

}  // namespace cpck
