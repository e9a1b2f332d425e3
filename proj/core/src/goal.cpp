#include "cpck/goal.hpp"

#include <set>

#include "cpck/errors.hpp"

namespace cpck {

Signature Goal::signature() const {
  Signature sig;
  sig.allow_iff = true;
  sig.allow_nat = true;
  for (const SortParam& sp : sorts) sig.sorts.insert(sp.name);
  for (const ConstDecl& c : consts) sig.consts.emplace(c.name, mk_var(c.name, c.sort));
  for (const FunSigPtr& f : funs) sig.funs.emplace(f->name, f);
  return sig;
}

// --- parsing ------------------------------------------------------------------

namespace {

[[noreturn]] void fail(const SExpr& e, const std::string& msg) {
  throw ParseError(e.line, e.col, msg);
}

std::string take_name(const SExpr& e, const char* what) {
  if (e.type != SExpr::Type::Symbol) fail(e, std::string(what) + " name must be a symbol");
  return e.text;
}

TermPtr parse_formula(const SExpr& e, const Signature& sig, const char* what) {
  TermPtr t = parse_term(e, sig);
  Sort s = well_sorted(t);
  if (!s.is_bool()) {
    throw SortError(to_sexpr(t), "Bool", render_sort(s));
  }
  (void)what;
  return t;
}

}  // namespace

Goal parse_goal(std::string_view input) {
  Goal goal;
  Signature sig;
  sig.allow_iff = true;
  sig.allow_nat = true;
  std::set<std::string> hyp_names;
  bool have_goal = false;

  for (const SExpr& form : read_sexprs(input)) {
    if (!form.is_list() || form.items.empty() || form.items[0].type != SExpr::Type::Symbol) {
      fail(form, "expected (sort ...), (const ...), (fun ...), (hyp ...) or (goal ...)");
    }
    const std::string& head = form.items[0].text;
    std::size_t n = form.items.size() - 1;

    if (head == "sort") {
      if (n < 1 || n > 2) fail(form, "sort takes a name and optionally :nonempty");
      std::string name = take_name(form.items[1], "sort");
      if (sig.sorts.count(name)) fail(form.items[1], "sort '" + name + "' already declared");
      bool nonempty = false;
      if (n == 2) {
        const SExpr& flag = form.items[2];
        if (flag.type != SExpr::Type::Keyword || flag.text != "nonempty") {
          fail(flag, "the only sort attribute is :nonempty");
        }
        nonempty = true;
      }
      sig.sorts.insert(name);
      goal.sorts.push_back({name, nonempty});
    } else if (head == "const") {
      if (n != 2) fail(form, "const takes a name and a sort");
      std::string name = take_name(form.items[1], "constant");
      if (sig.knows(name)) fail(form.items[1], "symbol '" + name + "' already declared");
      Sort sort = parse_sort(form.items[2], sig);
      sig.consts.emplace(name, mk_var(name, sort));
      goal.consts.push_back({name, sort});
    } else if (head == "fun") {
      if (n != 3) fail(form, "fun takes a name, an argument sort list and a result sort");
      std::string name = take_name(form.items[1], "function");
      if (sig.knows(name)) fail(form.items[1], "symbol '" + name + "' already declared");
      if (!form.items[2].is_list() || form.items[2].items.empty()) {
        fail(form.items[2], "fun needs a non-empty argument sort list");
      }
      std::vector<Sort> args;
      for (const SExpr& se : form.items[2].items) {
        Sort s = parse_sort(se, sig);
        if (s.is_nat()) fail(se, "Nat is not allowed in function signatures");
        args.push_back(s);
      }
      Sort result = parse_sort(form.items[3], sig);
      if (result.is_nat()) fail(form.items[3], "Nat is not allowed in function signatures");
      FunSigPtr fs = mk_fun_sig(name, std::move(args), result);
      sig.funs.emplace(name, fs);
      goal.funs.push_back(std::move(fs));
    } else if (head == "hyp") {
      if (n != 2) fail(form, "hyp takes a name and a formula");
      std::string name = take_name(form.items[1], "hypothesis");
      if (!hyp_names.insert(name).second) {
        fail(form.items[1], "hypothesis '" + name + "' already declared");
      }
      goal.hypotheses.push_back({name, parse_formula(form.items[2], sig, "hypothesis")});
    } else if (head == "goal") {
      if (n != 1) fail(form, "goal takes one formula");
      if (have_goal) fail(form, "only one goal form is allowed");
      have_goal = true;
      goal.conclusion = parse_formula(form.items[1], sig, "goal");
    } else {
      fail(form.items[0], "unknown form '" + head + "'");
    }
  }
  if (!have_goal) throw ParseError(1, 1, "input has no (goal ...) form");
  return goal;
}

// --- preprocessing --------------------------------------------------------------

namespace {

// Nat values admit +, * and comparisons; -, unary - and / have no
// truth-preserving relaxation to Int, so any Nat-valued operand under them is
// rejected.  Returns whether the term itself is Nat-valued.
bool nat_taint(const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::Var: return t->var_sort().is_nat();
    case Term::Kind::Forall: {
      nat_taint(t->body());
      return false;
    }
    case Term::Kind::ToReal: {
      nat_taint(t->children()[0]);
      return false;
    }
    case Term::Kind::App: break;
    default: return false;
  }
  bool any = false;
  for (const TermPtr& c : t->children()) any |= nat_taint(c);
  switch (t->op()) {
    case Op::Add:
    case Op::Mul: return any;
    case Op::Sub:
    case Op::Neg:
    case Op::Div:
      if (any) {
        throw UnsupportedConstruct("cannot relax " + to_sexpr(t) +
                                   ": subtraction, negation and division are not defined "
                                   "for Nat operands");
      }
      return false;
    default: return false;
  }
}

TermPtr relax_node(const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::Var:
      if (t->var_sort().is_nat()) return mk_var(t->name(), Sort::integer());
      return t;
    case Term::Kind::App:
      if (t->op() == Op::Iff) return mk_eq(t->children()[0], t->children()[1]);
      return t;
    case Term::Kind::Forall: {
      std::vector<Binding> binders = t->binders();
      std::vector<TermPtr> guards;
      for (Binding& b : binders) {
        if (b.sort.is_nat()) {
          b.sort = Sort::integer();
          guards.push_back(mk_le(mk_int(0), mk_var(b.name, Sort::integer())));
        }
      }
      if (guards.empty()) return t;
      TermPtr guard = guards.back();
      for (std::size_t k = guards.size() - 1; k-- > 0;) guard = mk_and(guards[k], guard);
      return mk_forall(std::move(binders), mk_implies(guard, t->body()));
    }
    default: return t;
  }
}

std::string rewrite_reason(const TermPtr& before) {
  bool had_iff = contains(before, [](const TermPtr& n) { return n->is_app(Op::Iff); });
  bool had_nat = contains(before, [](const TermPtr& n) {
    if (n->kind() == Term::Kind::Var) return n->var_sort().is_nat();
    if (n->kind() == Term::Kind::Forall) {
      for (const Binding& b : n->binders()) {
        if (b.sort.is_nat()) return true;
      }
    }
    return false;
  });
  std::string reason;
  if (had_iff) reason = "iff replaced by Bool equality";
  if (had_nat) {
    if (!reason.empty()) reason += "; ";
    reason += "Nat relaxed to Int with nonnegativity guard";
  }
  return reason.empty() ? "normalized" : reason;
}

}  // namespace

PreprocessResult preprocess(const Goal& g) {
  for (const Hypothesis& h : g.hypotheses) nat_taint(h.formula);
  nat_taint(g.conclusion);

  PreprocessResult out;
  out.goal.sorts = g.sorts;
  out.goal.funs = g.funs;

  std::vector<std::string> relaxed;
  for (const ConstDecl& c : g.consts) {
    if (c.sort.is_nat()) {
      out.goal.consts.push_back({c.name, Sort::integer()});
      relaxed.push_back(c.name);
    } else {
      out.goal.consts.push_back(c);
    }
  }

  std::set<std::string> hyp_names;
  for (const Hypothesis& h : g.hypotheses) {
    TermPtr nf = transform(h.formula, relax_node);
    if (!equal(nf, h.formula)) {
      out.rewrites.push_back({h.formula, nf, rewrite_reason(h.formula)});
    }
    out.goal.hypotheses.push_back({h.name, nf});
    hyp_names.insert(h.name);
  }
  TermPtr nc = transform(g.conclusion, relax_node);
  if (!equal(nc, g.conclusion)) {
    out.rewrites.push_back({g.conclusion, nc, rewrite_reason(g.conclusion)});
  }
  out.goal.conclusion = nc;

  for (const std::string& name : relaxed) {
    std::string hn = name + "_nonneg";
    while (hyp_names.count(hn)) hn += "_";
    hyp_names.insert(hn);
    TermPtr guard = mk_le(mk_int(0), mk_var(name, Sort::integer()));
    out.goal.hypotheses.push_back({hn, guard});
    out.rewrites.push_back(
        {nullptr, guard, "nonnegativity guard for relaxed Nat constant '" + name + "'"});
  }
  return out;
}

// --- translation ---------------------------------------------------------------

namespace {

void require_preprocessed(const TermPtr& t) {
  if (contains(t, [](const TermPtr& n) { return n->is_app(Op::Iff); })) {
    throw UnsupportedConstruct("translate requires a preprocessed goal: iff remains in " +
                               to_sexpr(t));
  }
  bool nat = contains(t, [](const TermPtr& n) {
    if (n->kind() == Term::Kind::Var) return n->var_sort().is_nat();
    if (n->kind() == Term::Kind::Forall) {
      for (const Binding& b : n->binders()) {
        if (b.sort.is_nat()) return true;
      }
    }
    return false;
  });
  if (nat) {
    throw UnsupportedConstruct("translate requires a preprocessed goal: Nat remains in " +
                               to_sexpr(t));
  }
}

bool quantifies_over(const TermPtr& t, const Sort& s) {
  return contains(t, [&](const TermPtr& n) {
    if (n->kind() != Term::Kind::Forall) return false;
    for (const Binding& b : n->binders()) {
      if (b.sort == s) return true;
    }
    return false;
  });
}

}  // namespace

TranslateResult translate(const Goal& g) {
  for (const ConstDecl& c : g.consts) {
    if (c.sort.is_nat()) {
      throw UnsupportedConstruct("translate requires a preprocessed goal: constant '" + c.name +
                                 "' has sort Nat");
    }
  }
  for (const Hypothesis& h : g.hypotheses) require_preprocessed(h.formula);
  require_preprocessed(g.conclusion);

  TranslateResult out;
  Script& s = out.script;
  for (const SortParam& sp : g.sorts) s.sorts.push_back(sp.name);
  s.consts = g.consts;
  s.funs = g.funs;
  for (const Hypothesis& h : g.hypotheses) s.assertions.push_back(h.formula);

  TermPtr negated;
  if (g.conclusion->is_app(Op::Eq) &&
      well_sorted(g.conclusion->children()[0]).is_bool()) {
    negated = mk_distinct(g.conclusion->children()[0], g.conclusion->children()[1]);
  } else {
    negated = mk_not(g.conclusion);
  }
  s.assertions.push_back(negated);
  s.check_sat = true;

  for (const SortParam& sp : g.sorts) {
    Sort sort = Sort::uninterpreted(sp.name);
    const ConstDecl* witness = nullptr;
    for (const ConstDecl& c : g.consts) {
      if (c.sort == sort) {
        witness = &c;
        break;
      }
    }
    if (witness) {
      out.obligations.push_back({sp.name, WitnessStatus::WitnessConst, witness->name});
      continue;
    }
    if (sp.nonempty) {
      out.obligations.push_back({sp.name, WitnessStatus::DeclaredNonempty, ""});
      continue;
    }
    bool quantified = false;
    for (const TermPtr& a : s.assertions) {
      if (quantifies_over(a, sort)) {
        quantified = true;
        break;
      }
    }
    if (!quantified) {
      out.obligations.push_back({sp.name, WitnessStatus::NotQuantified, ""});
      continue;
    }
    throw EmptySortRisk(sp.name);
  }
  return out;
}

}  // namespace cpck
