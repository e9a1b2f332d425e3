#include "cpck/rules.hpp"

#include <algorithm>

namespace cpck {

const char* rule_error_name(RuleErrorCode code) {
  switch (code) {
    case RuleErrorCode::PivotNotFound: return "pivot not found";
    case RuleErrorCode::ConclusionMismatch: return "conclusion mismatch";
    case RuleErrorCode::EmptyPremises: return "empty premises";
    case RuleErrorCode::ArityMismatch: return "arity mismatch";
    case RuleErrorCode::NotAnEquality: return "not an equality";
    case RuleErrorCode::UnsupportedConstruct: return "unsupported construct";
    case RuleErrorCode::NormalFormMismatch: return "normal form mismatch";
    case RuleErrorCode::PremiseShape: return "premise shape";
    case RuleErrorCode::BadArgument: return "bad argument";
    case RuleErrorCode::UnknownRule: return "unknown rule";
    case RuleErrorCode::HoleRejected: return "hole rejected";
  }
  return "?";
}

namespace {

RuleError err(RuleErrorCode code, std::string detail = "") {
  return RuleError{code, std::move(detail)};
}

std::string render_clause(const ClauseView& c) { return to_sexpr(c.to_term()); }

}  // namespace

// --- resolution -------------------------------------------------------------------

RuleResult check_resolution(const ClauseView& c1, const ClauseView& c2, bool pol,
                            const TermPtr& pivot, const ClauseView& claimed) {
  TermPtr negated = mk_not(pivot);
  const TermPtr& in_c1 = pol ? pivot : negated;
  const TermPtr& in_c2 = pol ? negated : pivot;

  std::size_t i = c1.size();
  for (std::size_t k = 0; k < c1.size(); ++k) {
    if (equal(c1[k], in_c1)) {
      i = k;
      break;
    }
  }
  if (i == c1.size()) {
    return err(RuleErrorCode::PivotNotFound,
               "left premise has no occurrence of " + to_sexpr(in_c1));
  }
  std::size_t j = c2.size();
  for (std::size_t k = 0; k < c2.size(); ++k) {
    if (equal(c2[k], in_c2)) {
      j = k;
      break;
    }
  }
  if (j == c2.size()) {
    return err(RuleErrorCode::PivotNotFound,
               "right premise has no occurrence of " + to_sexpr(in_c2));
  }

  std::vector<TermPtr> expected;
  expected.reserve(c1.size() + c2.size() - 2);
  for (std::size_t k = 0; k < c1.size(); ++k) {
    if (k != i) expected.push_back(c1[k]);
  }
  for (std::size_t k = 0; k < c2.size(); ++k) {
    if (k != j) expected.push_back(c2[k]);
  }
  ClauseView want(std::move(expected));
  if (!(claimed == want)) {
    return err(RuleErrorCode::ConclusionMismatch, "expected " + render_clause(want));
  }
  return std::nullopt;
}

// --- arith_sum_ub ------------------------------------------------------------------

std::optional<RelChain> premise_to_rel_chain(const TermPtr& premise) {
  if (premise->kind() != Term::Kind::App) return std::nullopt;
  Op op = premise->op();
  if (op != Op::Lt && op != Op::Le && op != Op::Eq) return std::nullopt;
  const TermPtr& lhs = premise->children()[0];
  const TermPtr& rhs = premise->children()[1];
  Sort carrier;
  try {
    carrier = well_sorted(lhs).base();
  } catch (const SortError&) {
    return std::nullopt;
  }
  if (!carrier.is_arith()) return std::nullopt;
  return RelChain{op, lhs, rhs, carrier};
}

RuleResult check_sum_ub(const std::vector<RelChain>& premises, const TermPtr& claimed) {
  if (premises.empty()) return err(RuleErrorCode::EmptyPremises);

  bool any_lt = false;
  bool any_real = false;
  for (const RelChain& p : premises) {
    any_lt |= p.rel == Op::Lt;
    any_real |= p.carrier == Sort::real();
  }

  TermPtr sum_lhs, sum_rhs;
  for (const RelChain& p : premises) {
    TermPtr l = p.lhs;
    TermPtr r = p.rhs;
    if (any_real && p.carrier != Sort::real()) {
      l = mk_to_real(l);
      r = mk_to_real(r);
    }
    sum_lhs = sum_lhs ? mk_add(sum_lhs, l) : l;
    sum_rhs = sum_rhs ? mk_add(sum_rhs, r) : r;
  }
  TermPtr expected = any_lt ? mk_lt(sum_lhs, sum_rhs) : mk_le(sum_lhs, sum_rhs);
  if (!equal(claimed, expected)) {
    return err(RuleErrorCode::ConclusionMismatch, "expected " + to_sexpr(expected));
  }
  return std::nullopt;
}

// --- arith_mult_tangent --------------------------------------------------------------

RuleResult check_mult_tangent(const TermPtr& x, const TermPtr& y, const Rat& a, const Rat& b,
                              bool sigma, const TermPtr& claimed) {
  Sort sx, sy;
  try {
    sx = well_sorted(x);
    sy = well_sorted(y);
  } catch (const SortError& e) {
    return err(RuleErrorCode::BadArgument, e.what());
  }
  if (sx.base() != Sort::real() || sy.base() != Sort::real()) {
    return err(RuleErrorCode::BadArgument, "x and y must be Real-sorted");
  }

  TermPtr ac = mk_rat(a);
  TermPtr bc = mk_rat(b);
  TermPtr product = mk_mul(x, y);
  TermPtr tplane = mk_sub(mk_add(mk_mul(bc, x), mk_mul(ac, y)), mk_mul(ac, bc));
  TermPtr lhs = sigma ? mk_le(product, tplane) : mk_ge(product, tplane);
  TermPtr rhs = sigma ? mk_or(mk_and(mk_le(x, ac), mk_ge(y, bc)),
                              mk_and(mk_ge(x, ac), mk_le(y, bc)))
                      : mk_or(mk_and(mk_le(x, ac), mk_le(y, bc)),
                              mk_and(mk_ge(x, ac), mk_ge(y, bc)));
  TermPtr expected = mk_eq(lhs, rhs);
  // AC-flatten before comparing so any association of the tangent-plane sum
  // is accepted.
  if (!equal(ac_canon(claimed), ac_canon(expected))) {
    return err(RuleErrorCode::ConclusionMismatch, "expected " + to_sexpr(expected));
  }
  return std::nullopt;
}

// --- term -> ArithExpr reflection ------------------------------------------------------

ArithPtr VarIntern::leaf(const TermPtr& t, const Sort& sort) {
  if (sort.base() == Sort::integer()) {
    auto [it, fresh] = ints_.try_emplace(t, static_cast<std::uint32_t>(ints_.size()));
    (void)fresh;
    return aint_var(it->second);
  }
  auto [it, fresh] = reals_.try_emplace(t, static_cast<std::uint32_t>(reals_.size()));
  (void)fresh;
  return areal_var(it->second);
}

ArithPtr term_to_arith(const TermPtr& t, VarIntern& vars) {
  switch (t->kind()) {
    case Term::Kind::IntLit: return aconst(Rat(t->int_value()), ArithType::Int);
    case Term::Kind::RatLit: return aconst(t->rat_value(), ArithType::Real);
    case Term::Kind::ToReal: return acast(term_to_arith(t->children()[0], vars));
    case Term::Kind::Var: {
      const Sort& s = t->var_sort();
      if (!s.is_arith()) {
        throw UnsupportedConstruct("variable " + t->name() + " is not arithmetic");
      }
      return vars.leaf(t, s);
    }
    case Term::Kind::App: break;
    default: throw UnsupportedConstruct("term " + to_sexpr(t) + " is not arithmetic");
  }
  switch (t->op()) {
    case Op::Add: return aadd(term_to_arith(t->children()[0], vars),
                              term_to_arith(t->children()[1], vars));
    case Op::Sub: return asub(term_to_arith(t->children()[0], vars),
                              term_to_arith(t->children()[1], vars));
    case Op::Mul: return amul(term_to_arith(t->children()[0], vars),
                              term_to_arith(t->children()[1], vars));
    case Op::Neg: return aneg(term_to_arith(t->children()[0], vars));
    case Op::Div: {
      auto divisor = constant_value(t->children()[1]);
      if (!divisor || divisor->is_zero()) {
        throw UnsupportedConstruct("division requires a nonzero constant divisor in " +
                                   to_sexpr(t));
      }
      return adiv_const(term_to_arith(t->children()[0], vars), *divisor);
    }
    case Op::Apply: {
      const Sort& s = t->sig()->result;
      if (!s.is_arith()) {
        throw UnsupportedConstruct("application " + to_sexpr(t) + " is not arithmetic");
      }
      return vars.leaf(t, s);
    }
    default: throw UnsupportedConstruct("operator " + std::string(op_name(t->op())) +
                                        " is not arithmetic");
  }
}

// --- arith_poly_norm ---------------------------------------------------------------------

RuleResult check_poly_norm(const TermPtr& claimed) {
  if (!claimed->is_app(Op::Eq)) return err(RuleErrorCode::NotAnEquality);
  VarIntern vars;
  ArithPtr e1, e2;
  try {
    e1 = term_to_arith(claimed->children()[0], vars);
    e2 = term_to_arith(claimed->children()[1], vars);
  } catch (const UnsupportedConstruct& e) {
    return err(RuleErrorCode::UnsupportedConstruct, e.what());
  }
  // Integer equalities are compared at Real type; Cast is transparent for the
  // normal form, so this is a no-op on the polynomials.
  if (e1->type == ArithType::Int) e1 = acast(e1);
  if (e2->type == ArithType::Int) e2 = acast(e2);
  PolyEqCertificate cert = certify_poly_eq(e1, e2);
  if (!cert.equal) {
    return err(RuleErrorCode::NormalFormMismatch, "difference " + to_string(cert.difference));
  }
  return std::nullopt;
}

// --- ac_norm ---------------------------------------------------------------------------

namespace {

void collect_ac(const TermPtr& t, Op op, std::vector<TermPtr>& out) {
  if (t->is_app(op)) {
    collect_ac(t->children()[0], op, out);
    collect_ac(t->children()[1], op, out);
  } else {
    out.push_back(t);
  }
}

}  // namespace

TermPtr ac_canon(const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::App: {
      if (t->op() == Op::Add || t->op() == Op::Mul) {
        std::vector<TermPtr> ops;
        collect_ac(t, t->op(), ops);
        for (TermPtr& o : ops) o = ac_canon(o);
        std::stable_sort(ops.begin(), ops.end(),
                         [](const TermPtr& a, const TermPtr& b) { return compare(a, b) < 0; });
        TermPtr acc = ops[0];
        for (std::size_t k = 1; k < ops.size(); ++k) acc = mk_app(t->op(), {acc, ops[k]});
        return acc;
      }
      std::vector<TermPtr> kids;
      kids.reserve(t->children().size());
      bool changed = false;
      for (const TermPtr& c : t->children()) {
        kids.push_back(ac_canon(c));
        changed |= kids.back().get() != c.get();
      }
      if (!changed) return t;
      return t->op() == Op::Apply ? mk_apply(t->sig(), std::move(kids))
                                  : mk_app(t->op(), std::move(kids));
    }
    case Term::Kind::Forall: {
      TermPtr body = ac_canon(t->body());
      return body.get() == t->body().get() ? t : mk_forall(t->binders(), body);
    }
    case Term::Kind::ToReal: {
      TermPtr child = ac_canon(t->children()[0]);
      return child.get() == t->children()[0].get() ? t : mk_to_real(child);
    }
    default: return t;
  }
}

RuleResult check_ac_norm(const TermPtr& claimed) {
  if (!claimed->is_app(Op::Eq)) return err(RuleErrorCode::NotAnEquality);
  TermPtr l = ac_canon(claimed->children()[0]);
  TermPtr r = ac_canon(claimed->children()[1]);
  if (!equal(l, r)) {
    return err(RuleErrorCode::ConclusionMismatch,
               "sides differ after AC flattening: " + to_sexpr(l) + " vs " + to_sexpr(r));
  }
  return std::nullopt;
}

// --- structural rules ---------------------------------------------------------------------

namespace {

bool is_eq(const TermPtr& t) { return t->is_app(Op::Eq); }
const TermPtr& eq_lhs(const TermPtr& t) { return t->children()[0]; }
const TermPtr& eq_rhs(const TermPtr& t) { return t->children()[1]; }

std::optional<TermPtr> arg_term(const ProofArg& a) {
  if (const TermPtr* t = std::get_if<TermPtr>(&a)) return *t;
  if (const BigInt* i = std::get_if<BigInt>(&a)) return mk_int(*i);
  if (const Rat* r = std::get_if<Rat>(&a)) return mk_rat(*r);
  return std::nullopt;
}

std::optional<bool> arg_bool(const ProofArg& a) {
  if (const TermPtr* t = std::get_if<TermPtr>(&a)) {
    if ((*t)->kind() == Term::Kind::BoolLit) return (*t)->bool_value();
  }
  return std::nullopt;
}

std::optional<BigInt> arg_int(const ProofArg& a) {
  if (const BigInt* i = std::get_if<BigInt>(&a)) return *i;
  if (const TermPtr* t = std::get_if<TermPtr>(&a)) {
    if ((*t)->kind() == Term::Kind::IntLit) return (*t)->int_value();
  }
  return std::nullopt;
}

std::optional<Rat> arg_rat(const ProofArg& a) {
  if (const Rat* r = std::get_if<Rat>(&a)) return *r;
  if (const BigInt* i = std::get_if<BigInt>(&a)) return Rat(*i);
  if (const TermPtr* t = std::get_if<TermPtr>(&a)) {
    if ((*t)->kind() == Term::Kind::IntLit) return Rat((*t)->int_value());
    if ((*t)->kind() == Term::Kind::RatLit) return (*t)->rat_value();
  }
  return std::nullopt;
}

RuleResult want_arity(const std::vector<TermPtr>& premises, std::size_t np,
                      const std::vector<ProofArg>& args, std::size_t na) {
  if (premises.size() != np) {
    return err(RuleErrorCode::ArityMismatch, "expected " + std::to_string(np) + " premises, got " +
                                                 std::to_string(premises.size()));
  }
  if (args.size() != na) {
    return err(RuleErrorCode::ArityMismatch,
               "expected " + std::to_string(na) + " args, got " + std::to_string(args.size()));
  }
  return std::nullopt;
}

RuleResult mismatch(const TermPtr& expected) {
  return err(RuleErrorCode::ConclusionMismatch, "expected " + to_sexpr(expected));
}

}  // namespace

RuleResult check_structural(const std::string& rule, const std::vector<TermPtr>& premises,
                            const std::vector<ProofArg>& args, const TermPtr& claimed) {
  if (rule == "assume_elim") {
    if (auto e = want_arity(premises, 1, args, 0)) return e;
    if (!equal(claimed, premises[0])) return mismatch(premises[0]);
    return std::nullopt;
  }
  if (rule == "refl") {
    if (auto e = want_arity(premises, 0, args, 1)) return e;
    auto t = arg_term(args[0]);
    if (!t) return err(RuleErrorCode::BadArgument, "refl takes a term argument");
    TermPtr expected = mk_eq(*t, *t);
    if (!equal(claimed, expected)) return mismatch(expected);
    return std::nullopt;
  }
  if (rule == "symm") {
    if (auto e = want_arity(premises, 1, args, 0)) return e;
    if (!is_eq(premises[0])) return err(RuleErrorCode::NotAnEquality, "premise");
    TermPtr expected = mk_eq(eq_rhs(premises[0]), eq_lhs(premises[0]));
    if (!equal(claimed, expected)) return mismatch(expected);
    return std::nullopt;
  }
  if (rule == "trans") {
    if (premises.size() < 2) {
      return err(RuleErrorCode::ArityMismatch, "trans takes at least two premises");
    }
    if (!args.empty()) return err(RuleErrorCode::ArityMismatch, "trans takes no args");
    for (const TermPtr& p : premises) {
      if (!is_eq(p)) return err(RuleErrorCode::NotAnEquality, "premise " + to_sexpr(p));
    }
    for (std::size_t k = 0; k + 1 < premises.size(); ++k) {
      if (!equal(eq_rhs(premises[k]), eq_lhs(premises[k + 1]))) {
        return err(RuleErrorCode::PremiseShape,
                   "chain breaks between premise " + std::to_string(k) + " and " +
                       std::to_string(k + 1));
      }
    }
    TermPtr expected = mk_eq(eq_lhs(premises.front()), eq_rhs(premises.back()));
    if (!equal(claimed, expected)) return mismatch(expected);
    return std::nullopt;
  }
  if (rule == "cong") {
    if (premises.empty()) {
      return err(RuleErrorCode::ArityMismatch, "cong takes at least one premise");
    }
    if (!args.empty()) return err(RuleErrorCode::ArityMismatch, "cong takes no args");
    for (const TermPtr& p : premises) {
      if (!is_eq(p)) return err(RuleErrorCode::NotAnEquality, "premise " + to_sexpr(p));
    }
    if (!is_eq(claimed)) return err(RuleErrorCode::NotAnEquality, "conclusion");
    const TermPtr& l = eq_lhs(claimed);
    const TermPtr& r = eq_rhs(claimed);
    bool apps = l->kind() == Term::Kind::App && r->kind() == Term::Kind::App &&
                l->op() == r->op() &&
                (l->op() != Op::Apply || *l->sig() == *r->sig());
    bool casts = l->kind() == Term::Kind::ToReal && r->kind() == Term::Kind::ToReal;
    if (!apps && !casts) {
      return err(RuleErrorCode::ConclusionMismatch,
                 "conclusion sides must apply the same operator");
    }
    if (l->children().size() != r->children().size() ||
        premises.size() != l->children().size()) {
      return err(RuleErrorCode::ArityMismatch,
                 "premise count must match the operator's argument count");
    }
    for (std::size_t k = 0; k < premises.size(); ++k) {
      if (!equal(eq_lhs(premises[k]), l->children()[k]) ||
          !equal(eq_rhs(premises[k]), r->children()[k])) {
        return err(RuleErrorCode::ConclusionMismatch,
                   "argument " + std::to_string(k) + " does not follow from premise " +
                       std::to_string(k));
      }
    }
    return std::nullopt;
  }
  if (rule == "eq_resolve") {
    if (auto e = want_arity(premises, 2, args, 0)) return e;
    if (!is_eq(premises[1])) return err(RuleErrorCode::NotAnEquality, "second premise");
    if (!equal(premises[0], eq_lhs(premises[1]))) {
      return err(RuleErrorCode::PremiseShape,
                 "first premise must be the left side of the equality");
    }
    if (!equal(claimed, eq_rhs(premises[1]))) return mismatch(eq_rhs(premises[1]));
    return std::nullopt;
  }
  if (rule == "not_not_elim") {
    if (auto e = want_arity(premises, 1, args, 0)) return e;
    const TermPtr& p = premises[0];
    if (!p->is_app(Op::Not) || !p->children()[0]->is_app(Op::Not)) {
      return err(RuleErrorCode::PremiseShape, "premise must be a double negation");
    }
    const TermPtr& inner = p->children()[0]->children()[0];
    if (!equal(claimed, inner)) return mismatch(inner);
    return std::nullopt;
  }
  if (rule == "contra") {
    if (auto e = want_arity(premises, 2, args, 0)) return e;
    if (!premises[1]->is_app(Op::Not) || !equal(premises[1]->children()[0], premises[0])) {
      return err(RuleErrorCode::PremiseShape,
                 "second premise must be the negation of the first");
    }
    if (!claimed->is_false()) return mismatch(mk_false());
    return std::nullopt;
  }
  if (rule == "and_elim") {
    if (auto e = want_arity(premises, 1, args, 1)) return e;
    auto idx = arg_int(args[0]);
    if (!idx) return err(RuleErrorCode::BadArgument, "and_elim takes an integer index");
    std::vector<TermPtr> conjuncts = flatten_chain(Op::And, premises[0]);
    if (*idx < 0 || *idx >= BigInt(conjuncts.size())) {
      return err(RuleErrorCode::BadArgument,
                 "index " + idx->str() + " out of range for " +
                     std::to_string(conjuncts.size()) + " conjuncts");
    }
    const TermPtr& expected = conjuncts[static_cast<std::size_t>(*idx)];
    if (!equal(claimed, expected)) return mismatch(expected);
    return std::nullopt;
  }
  if (rule == "or_intro") {
    if (auto e = want_arity(premises, 1, args, 1)) return e;
    auto t = arg_term(args[0]);
    if (!t) return err(RuleErrorCode::BadArgument, "or_intro takes a term argument");
    TermPtr expected = mk_or(premises[0], *t);
    if (!equal(claimed, expected)) return mismatch(expected);
    return std::nullopt;
  }
  if (rule == "equiv_elim1" || rule == "equiv_elim2") {
    if (auto e = want_arity(premises, 1, args, 0)) return e;
    if (!is_eq(premises[0])) return err(RuleErrorCode::NotAnEquality, "premise");
    const TermPtr& phi = eq_lhs(premises[0]);
    const TermPtr& psi = eq_rhs(premises[0]);
    Sort s = well_sorted(phi);
    if (!s.is_bool()) {
      return err(RuleErrorCode::PremiseShape, "premise must be a Bool equality");
    }
    TermPtr expected = rule == "equiv_elim1" ? mk_or(mk_not(phi), psi)
                                             : mk_or(phi, mk_not(psi));
    if (!equal(claimed, expected)) return mismatch(expected);
    return std::nullopt;
  }
  return err(RuleErrorCode::UnknownRule, rule);
}

// --- registry ----------------------------------------------------------------------------

namespace {

RuleResult dispatch_resolution(const std::vector<TermPtr>& premises,
                               const std::vector<ProofArg>& args, const TermPtr& claimed) {
  if (premises.size() != 2 || args.size() != 2) {
    return err(RuleErrorCode::ArityMismatch, "resolution takes 2 premises and args (pol, pivot)");
  }
  auto pol = arg_bool(args[0]);
  if (!pol) return err(RuleErrorCode::BadArgument, "first argument must be true or false");
  auto pivot = arg_term(args[1]);
  if (!pivot) return err(RuleErrorCode::BadArgument, "second argument must be the pivot term");
  return check_resolution(ClauseView::from_term(premises[0]), ClauseView::from_term(premises[1]),
                          *pol, *pivot, ClauseView::from_term(claimed));
}

RuleResult dispatch_sum_ub(const std::vector<TermPtr>& premises, const std::vector<ProofArg>& args,
                           const TermPtr& claimed) {
  if (!args.empty()) return err(RuleErrorCode::ArityMismatch, "arith_sum_ub takes no args");
  if (premises.empty()) return err(RuleErrorCode::EmptyPremises);
  std::vector<RelChain> rels;
  rels.reserve(premises.size());
  for (const TermPtr& p : premises) {
    auto rel = premise_to_rel_chain(p);
    if (!rel) {
      return err(RuleErrorCode::PremiseShape,
                 to_sexpr(p) + " is not an arithmetic <, <= or = premise");
    }
    rels.push_back(std::move(*rel));
  }
  return check_sum_ub(rels, claimed);
}

RuleResult dispatch_mult_tangent(const std::vector<TermPtr>& premises,
                                 const std::vector<ProofArg>& args, const TermPtr& claimed) {
  if (premises.size() != 0 || args.size() != 5) {
    return err(RuleErrorCode::ArityMismatch,
               "arith_mult_tangent takes no premises and args (x y a b sigma)");
  }
  auto x = arg_term(args[0]);
  auto y = arg_term(args[1]);
  auto a = arg_rat(args[2]);
  auto b = arg_rat(args[3]);
  auto sigma = arg_bool(args[4]);
  if (!x || !y) return err(RuleErrorCode::BadArgument, "x and y must be terms");
  if (!a || !b) return err(RuleErrorCode::BadArgument, "a and b must be rational constants");
  if (!sigma) return err(RuleErrorCode::BadArgument, "sigma must be true or false");
  return check_mult_tangent(*x, *y, *a, *b, *sigma, claimed);
}

RuleResult dispatch_poly_norm(const std::vector<TermPtr>& premises,
                              const std::vector<ProofArg>& args, const TermPtr& claimed) {
  if (auto e = want_arity(premises, 0, args, 0)) return e;
  return check_poly_norm(claimed);
}

RuleResult dispatch_ac_norm(const std::vector<TermPtr>& premises,
                            const std::vector<ProofArg>& args, const TermPtr& claimed) {
  if (auto e = want_arity(premises, 0, args, 0)) return e;
  return check_ac_norm(claimed);
}

template <const char* Name>
RuleResult dispatch_structural(const std::vector<TermPtr>& premises,
                               const std::vector<ProofArg>& args, const TermPtr& claimed) {
  return check_structural(Name, premises, args, claimed);
}

constexpr char kAssumeElim[] = "assume_elim";
constexpr char kRefl[] = "refl";
constexpr char kSymm[] = "symm";
constexpr char kTrans[] = "trans";
constexpr char kCong[] = "cong";
constexpr char kEqResolve[] = "eq_resolve";
constexpr char kNotNotElim[] = "not_not_elim";
constexpr char kContra[] = "contra";
constexpr char kAndElim[] = "and_elim";
constexpr char kOrIntro[] = "or_intro";
constexpr char kEquivElim1[] = "equiv_elim1";
constexpr char kEquivElim2[] = "equiv_elim2";

}  // namespace

RuleRegistry::RuleRegistry() {
  checkers_ = {
      {"resolution", dispatch_resolution},
      {"arith_sum_ub", dispatch_sum_ub},
      {"arith_mult_tangent", dispatch_mult_tangent},
      {"arith_poly_norm", dispatch_poly_norm},
      {"ac_norm", dispatch_ac_norm},
      {"assume_elim", dispatch_structural<kAssumeElim>},
      {"refl", dispatch_structural<kRefl>},
      {"symm", dispatch_structural<kSymm>},
      {"trans", dispatch_structural<kTrans>},
      {"cong", dispatch_structural<kCong>},
      {"eq_resolve", dispatch_structural<kEqResolve>},
      {"not_not_elim", dispatch_structural<kNotNotElim>},
      {"contra", dispatch_structural<kContra>},
      {"and_elim", dispatch_structural<kAndElim>},
      {"or_intro", dispatch_structural<kOrIntro>},
      {"equiv_elim1", dispatch_structural<kEquivElim1>},
      {"equiv_elim2", dispatch_structural<kEquivElim2>},
  };
}

const RuleRegistry& RuleRegistry::standard() {
  static const RuleRegistry registry;
  return registry;
}

const RuleChecker* RuleRegistry::find(const std::string& name) const {
  for (const RuleChecker& c : checkers_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::vector<std::string> RuleRegistry::names() const {
  std::vector<std::string> out;
  out.reserve(checkers_.size());
  for (const RuleChecker& c : checkers_) out.push_back(c.name);
  return out;
}

}  // namespace cpck
