#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cpck/errors.hpp"
#include "cpck/rational.hpp"
#include "cpck/sort.hpp"

namespace cpck {

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Connectives and operators of App nodes.  All of them are binary except Not,
// Neg (unary) and Apply (arity given by the signature).  N-ary surface syntax
// is folded into this shape by the parsers.
enum class Op {
  Not, And, Or, Implies, Iff, Eq, Distinct, Lt, Le,
  Add, Sub, Mul, Div, Neg, Apply,
};

const char* op_name(Op op);

struct Binding {
  std::string name;
  Sort sort;
  bool operator==(const Binding& o) const { return name == o.name && sort == o.sort; }
};

// Immutable term node.  Construct through the mk_* factories, which normalize
// (> a b) to (< b a) and (>= a b) to (<= b a) so the rest of the code only
// ever sees < and <=.  Nodes are shared; structural equality has pointer and
// hash fast paths.  Destruction is iterative, so chains hundreds of thousands
// of nodes deep tear down without exhausting the stack.
class Term {
public:
  enum class Kind { Var, IntLit, RatLit, BoolLit, App, Forall, ToReal };

  ~Term();
  Term(const Term&) = delete;
  Term& operator=(const Term&) = delete;

  Kind kind() const { return kind_; }
  Op op() const { return op_; }                       // Kind::App only
  const std::string& name() const { return name_; }   // Var name / Apply symbol
  const Sort& var_sort() const { return var_sort_; }  // Kind::Var only
  const FunSigPtr& sig() const { return sig_; }       // Op::Apply only
  const BigInt& int_value() const { return int_value_; }
  const Rat& rat_value() const { return rat_value_; }
  bool bool_value() const { return bool_value_; }
  const std::vector<TermPtr>& children() const { return children_; }
  const std::vector<Binding>& binders() const { return binders_; }  // Kind::Forall
  const TermPtr& body() const { return children_[0]; }              // Kind::Forall
  std::size_t hash() const { return hash_; }

  bool is_false() const { return kind_ == Kind::BoolLit && !bool_value_; }
  bool is_true() const { return kind_ == Kind::BoolLit && bool_value_; }
  bool is_app(Op op) const { return kind_ == Kind::App && op_ == op; }

private:
  Term() = default;
  friend class TermBuilder;

  Kind kind_ = Kind::BoolLit;
  Op op_ = Op::Apply;
  bool bool_value_ = false;
  std::size_t hash_ = 0;
  std::string name_;
  Sort var_sort_;
  FunSigPtr sig_;
  BigInt int_value_;
  Rat rat_value_;
  std::vector<TermPtr> children_;
  std::vector<Binding> binders_;
};

// --- factories -------------------------------------------------------------

TermPtr mk_var(std::string name, Sort sort);
TermPtr mk_int(BigInt v);
TermPtr mk_int(long long v);
TermPtr mk_rat(Rat v);
TermPtr mk_bool(bool v);
TermPtr mk_true();
TermPtr mk_false();

// General App constructor; checks arity for the fixed-arity ops.
TermPtr mk_app(Op op, std::vector<TermPtr> args);
TermPtr mk_apply(FunSigPtr sig, std::vector<TermPtr> args);
TermPtr mk_forall(std::vector<Binding> binders, TermPtr body);
TermPtr mk_to_real(TermPtr t);

TermPtr mk_not(TermPtr a);
TermPtr mk_and(TermPtr a, TermPtr b);
TermPtr mk_or(TermPtr a, TermPtr b);
TermPtr mk_implies(TermPtr a, TermPtr b);
TermPtr mk_iff(TermPtr a, TermPtr b);
TermPtr mk_eq(TermPtr a, TermPtr b);
TermPtr mk_distinct(TermPtr a, TermPtr b);
TermPtr mk_lt(TermPtr a, TermPtr b);
TermPtr mk_le(TermPtr a, TermPtr b);
TermPtr mk_gt(TermPtr a, TermPtr b);  // becomes (< b a)
TermPtr mk_ge(TermPtr a, TermPtr b);  // becomes (<= b a)
TermPtr mk_add(TermPtr a, TermPtr b);
TermPtr mk_sub(TermPtr a, TermPtr b);
TermPtr mk_mul(TermPtr a, TermPtr b);
TermPtr mk_div(TermPtr a, TermPtr b);
TermPtr mk_neg(TermPtr a);

// --- equality, ordering, hashing --------------------------------------------

// Structural equality.  Iterative; pointer equality and hash mismatch are
// checked before any traversal.
bool equal(const Term& a, const Term& b);
inline bool equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  return equal(*a, *b);
}
inline bool operator==(const Term& a, const Term& b) { return equal(a, b); }

// Total order on terms; only the relative order matters (used to canonicalize
// AC operator chains).  compare(a, b) < 0 iff a precedes b.
int compare(const TermPtr& a, const TermPtr& b);

struct TermHash {
  std::size_t operator()(const TermPtr& t) const { return t->hash(); }
};
struct TermEq {
  bool operator()(const TermPtr& a, const TermPtr& b) const { return equal(a, b); }
};

// --- sorting ----------------------------------------------------------------

// Computes the sort of a term, throwing SortError on the first ill-sorted
// subterm.  Arithmetic operators accept Int/Nat mixtures (Nat is
// Int-carried); Real never mixes with Int except through to_real.  Division
// requires a nonzero constant divisor.
Sort well_sorted(const TermPtr& t);

// Exact constant folding over +, -, *, unary -, /, to_real and literals.
// Returns nullopt when the term is not a literal combination or a divisor
// folds to zero.
std::optional<Rat> constant_value(const TermPtr& t);

// --- printing ---------------------------------------------------------------

// SMT-LIB 2 rendering: binary applications, integer literals as N or (- N),
// rational literals as N.0, (- N.0), (/ N D) or (- (/ N D)), symbols quoted
// with |...| when they need it.
std::string to_sexpr(const TermPtr& t);
std::string quote_symbol(const std::string& name);

// --- clause view ------------------------------------------------------------

// A clause is a term seen as a right-nested chain of `or`: the term
// (or a (or b c)) is the clause [a, b, c].  `false` is the empty clause.  Any
// non-`or`, non-`false` term is the singleton clause of itself.  Only the
// right spine is split; a left operand that happens to be an `or` stays one
// literal.
class ClauseView {
public:
  ClauseView() = default;
  explicit ClauseView(std::vector<TermPtr> lits) : lits_(std::move(lits)) {}
  static ClauseView from_term(const TermPtr& t);

  // Right-folds the literals back into a term; empty becomes `false`.
  TermPtr to_term() const;

  bool empty() const { return lits_.empty(); }
  std::size_t size() const { return lits_.size(); }
  const TermPtr& operator[](std::size_t i) const { return lits_[i]; }
  const std::vector<TermPtr>& literals() const { return lits_; }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  bool operator==(const ClauseView& o) const;

private:
  std::vector<TermPtr> lits_;
};

inline ClauseView flatten_or(const TermPtr& t) { return ClauseView::from_term(t); }

// Splits the right spine of a chain of `op` nodes (no recursion into left
// operands).  A non-`op` term yields the singleton list.
std::vector<TermPtr> flatten_chain(Op op, const TermPtr& t);

// --- traversal helpers --------------------------------------------------------

// Bottom-up rewrite: applies fn to every node after its children have been
// rebuilt; fn returns the replacement (or its argument unchanged).  Shares
// unchanged subtrees.
TermPtr transform(const TermPtr& t, const std::function<TermPtr(const TermPtr&)>& fn);

// True if pred holds for some node of the term (binders included via their
// sorts is the caller's business; this walks term nodes only).
bool contains(const TermPtr& t, const std::function<bool(const TermPtr&)>& pred);

}  // namespace cpck
