#include "cpck/term.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace cpck {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

std::size_t hash_string(const std::string& s) {
  std::size_t h = 1469598103934665603ull;
  for (char c : s) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  return h;
}

std::size_t kind_seed(Term::Kind k) {
  return mix(0x2545f4914f6cdd1dull, static_cast<std::size_t>(k) + 1);
}

}  // namespace

const char* op_name(Op op) {
  switch (op) {
    case Op::Not: return "not";
    case Op::And: return "and";
    case Op::Or: return "or";
    case Op::Implies: return "=>";
    case Op::Iff: return "iff";
    case Op::Eq: return "=";
    case Op::Distinct: return "distinct";
    case Op::Lt: return "<";
    case Op::Le: return "<=";
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Div: return "/";
    case Op::Neg: return "-";
    case Op::Apply: return "apply";
  }
  return "?";
}

// Builds Term nodes; the only code with access to the private constructor.
class TermBuilder {
public:
  static std::shared_ptr<Term> fresh() { return std::shared_ptr<Term>(new Term()); }

  static TermPtr leaf_var(std::string name, Sort sort) {
    auto t = fresh();
    t->kind_ = Term::Kind::Var;
    t->name_ = std::move(name);
    t->var_sort_ = std::move(sort);
    t->hash_ = mix(mix(kind_seed(t->kind_), hash_string(t->name_)), t->var_sort_.hash());
    return t;
  }

  static TermPtr leaf_int(BigInt v) {
    auto t = fresh();
    t->kind_ = Term::Kind::IntLit;
    t->int_value_ = std::move(v);
    t->hash_ = mix(kind_seed(t->kind_), hash_bigint(t->int_value_));
    return t;
  }

  static TermPtr leaf_rat(Rat v) {
    auto t = fresh();
    t->kind_ = Term::Kind::RatLit;
    t->rat_value_ = std::move(v);
    t->hash_ = mix(kind_seed(t->kind_), t->rat_value_.hash());
    return t;
  }

  static TermPtr leaf_bool(bool v) {
    auto t = fresh();
    t->kind_ = Term::Kind::BoolLit;
    t->bool_value_ = v;
    t->hash_ = mix(kind_seed(t->kind_), v ? 2u : 1u);
    return t;
  }

  static TermPtr app(Op op, FunSigPtr sig, std::vector<TermPtr> args) {
    auto t = fresh();
    t->kind_ = Term::Kind::App;
    t->op_ = op;
    t->sig_ = std::move(sig);
    t->children_ = std::move(args);
    std::size_t h = mix(kind_seed(t->kind_), static_cast<std::size_t>(op) + 17);
    if (t->sig_) h = mix(h, hash_string(t->sig_->name));
    for (const auto& c : t->children_) h = mix(h, c->hash());
    t->hash_ = h;
    return t;
  }

  static TermPtr forall(std::vector<Binding> binders, TermPtr body) {
    auto t = fresh();
    t->kind_ = Term::Kind::Forall;
    t->binders_ = std::move(binders);
    t->children_.push_back(std::move(body));
    std::size_t h = kind_seed(t->kind_);
    for (const auto& b : t->binders_) h = mix(mix(h, hash_string(b.name)), b.sort.hash());
    h = mix(h, t->children_[0]->hash());
    t->hash_ = h;
    return t;
  }

  static TermPtr to_real(TermPtr child) {
    auto t = fresh();
    t->kind_ = Term::Kind::ToReal;
    t->children_.push_back(std::move(child));
    t->hash_ = mix(kind_seed(t->kind_), t->children_[0]->hash());
    return t;
  }
};

Term::~Term() {
  // Steal the children of uniquely-owned nodes into an explicit worklist so a
  // right-nested chain of any depth tears down without recursing.
  if (children_.empty()) return;
  std::vector<TermPtr> pending;
  pending.reserve(children_.size());
  for (auto& c : children_) pending.push_back(std::move(c));
  children_.clear();
  while (!pending.empty()) {
    TermPtr t = std::move(pending.back());
    pending.pop_back();
    if (t && t.use_count() == 1) {
      auto* sole = const_cast<Term*>(t.get());
      for (auto& c : sole->children_) pending.push_back(std::move(c));
      sole->children_.clear();
    }
  }
}

// --- factories ---------------------------------------------------------------

TermPtr mk_var(std::string name, Sort sort) {
  return TermBuilder::leaf_var(std::move(name), std::move(sort));
}
TermPtr mk_int(BigInt v) { return TermBuilder::leaf_int(std::move(v)); }
TermPtr mk_int(long long v) { return TermBuilder::leaf_int(BigInt(v)); }
TermPtr mk_rat(Rat v) { return TermBuilder::leaf_rat(std::move(v)); }
TermPtr mk_bool(bool v) { return TermBuilder::leaf_bool(v); }
TermPtr mk_true() { return mk_bool(true); }
TermPtr mk_false() { return mk_bool(false); }

static int fixed_arity(Op op) {
  switch (op) {
    case Op::Not:
    case Op::Neg: return 1;
    case Op::Apply: return -1;
    default: return 2;
  }
}

TermPtr mk_app(Op op, std::vector<TermPtr> args) {
  if (op == Op::Apply) throw Error("mk_app: use mk_apply for function applications");
  int want = fixed_arity(op);
  if (static_cast<int>(args.size()) != want) {
    throw Error(std::string("mk_app: ") + op_name(op) + " expects " + std::to_string(want) +
                " operands, got " + std::to_string(args.size()));
  }
  return TermBuilder::app(op, nullptr, std::move(args));
}

TermPtr mk_apply(FunSigPtr sig, std::vector<TermPtr> args) {
  if (!sig) throw Error("mk_apply: null signature");
  if (args.size() != sig->args.size()) {
    throw Error("mk_apply: " + sig->name + " expects " + std::to_string(sig->args.size()) +
                " arguments, got " + std::to_string(args.size()));
  }
  return TermBuilder::app(Op::Apply, std::move(sig), std::move(args));
}

TermPtr mk_forall(std::vector<Binding> binders, TermPtr body) {
  if (binders.empty()) throw Error("mk_forall: empty binder list");
  return TermBuilder::forall(std::move(binders), std::move(body));
}

TermPtr mk_to_real(TermPtr t) { return TermBuilder::to_real(std::move(t)); }

TermPtr mk_not(TermPtr a) { return mk_app(Op::Not, {std::move(a)}); }
TermPtr mk_and(TermPtr a, TermPtr b) { return mk_app(Op::And, {std::move(a), std::move(b)}); }
TermPtr mk_or(TermPtr a, TermPtr b) { return mk_app(Op::Or, {std::move(a), std::move(b)}); }
TermPtr mk_implies(TermPtr a, TermPtr b) { return mk_app(Op::Implies, {std::move(a), std::move(b)}); }
TermPtr mk_iff(TermPtr a, TermPtr b) { return mk_app(Op::Iff, {std::move(a), std::move(b)}); }
TermPtr mk_eq(TermPtr a, TermPtr b) { return mk_app(Op::Eq, {std::move(a), std::move(b)}); }
TermPtr mk_distinct(TermPtr a, TermPtr b) { return mk_app(Op::Distinct, {std::move(a), std::move(b)}); }
TermPtr mk_lt(TermPtr a, TermPtr b) { return mk_app(Op::Lt, {std::move(a), std::move(b)}); }
TermPtr mk_le(TermPtr a, TermPtr b) { return mk_app(Op::Le, {std::move(a), std::move(b)}); }
TermPtr mk_gt(TermPtr a, TermPtr b) { return mk_lt(std::move(b), std::move(a)); }
TermPtr mk_ge(TermPtr a, TermPtr b) { return mk_le(std::move(b), std::move(a)); }
TermPtr mk_add(TermPtr a, TermPtr b) { return mk_app(Op::Add, {std::move(a), std::move(b)}); }
TermPtr mk_sub(TermPtr a, TermPtr b) { return mk_app(Op::Sub, {std::move(a), std::move(b)}); }
TermPtr mk_mul(TermPtr a, TermPtr b) { return mk_app(Op::Mul, {std::move(a), std::move(b)}); }
TermPtr mk_div(TermPtr a, TermPtr b) { return mk_app(Op::Div, {std::move(a), std::move(b)}); }
TermPtr mk_neg(TermPtr a) { return mk_app(Op::Neg, {std::move(a)}); }

// --- equality ----------------------------------------------------------------

bool equal(const Term& a, const Term& b) {
  std::vector<std::pair<const Term*, const Term*>> stack;
  stack.emplace_back(&a, &b);
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x == y) continue;
    if (x->hash() != y->hash() || x->kind() != y->kind()) return false;
    switch (x->kind()) {
      case Term::Kind::Var:
        if (x->name() != y->name() || x->var_sort() != y->var_sort()) return false;
        break;
      case Term::Kind::IntLit:
        if (x->int_value() != y->int_value()) return false;
        break;
      case Term::Kind::RatLit:
        if (x->rat_value() != y->rat_value()) return false;
        break;
      case Term::Kind::BoolLit:
        if (x->bool_value() != y->bool_value()) return false;
        break;
      case Term::Kind::App: {
        if (x->op() != y->op()) return false;
        if (x->op() == Op::Apply && x->sig() != y->sig() && !(*x->sig() == *y->sig())) return false;
        if (x->children().size() != y->children().size()) return false;
        for (std::size_t i = 0; i < x->children().size(); ++i) {
          stack.emplace_back(x->children()[i].get(), y->children()[i].get());
        }
        break;
      }
      case Term::Kind::Forall:
        if (!(x->binders() == y->binders())) return false;
        stack.emplace_back(x->body().get(), y->body().get());
        break;
      case Term::Kind::ToReal:
        stack.emplace_back(x->children()[0].get(), y->children()[0].get());
        break;
    }
  }
  return true;
}

// --- total order ---------------------------------------------------------------

static int compare_raw(const Term* a, const Term* b);

static int compare_sorts(const Sort& a, const Sort& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
  return a.name().compare(b.name());
}

static int compare_children(const Term* a, const Term* b) {
  const auto& ca = a->children();
  const auto& cb = b->children();
  if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (int c = compare_raw(ca[i].get(), cb[i].get())) return c;
  }
  return 0;
}

static int compare_raw(const Term* a, const Term* b) {
  if (a == b) return 0;
  if (a->kind() != b->kind()) return a->kind() < b->kind() ? -1 : 1;
  switch (a->kind()) {
    case Term::Kind::Var: {
      if (int c = a->name().compare(b->name())) return c < 0 ? -1 : 1;
      return compare_sorts(a->var_sort(), b->var_sort());
    }
    case Term::Kind::IntLit:
      if (a->int_value() != b->int_value()) return a->int_value() < b->int_value() ? -1 : 1;
      return 0;
    case Term::Kind::RatLit:
      if (a->rat_value() != b->rat_value()) return a->rat_value() < b->rat_value() ? -1 : 1;
      return 0;
    case Term::Kind::BoolLit:
      if (a->bool_value() != b->bool_value()) return a->bool_value() ? 1 : -1;
      return 0;
    case Term::Kind::App: {
      if (a->op() != b->op()) return a->op() < b->op() ? -1 : 1;
      if (a->op() == Op::Apply) {
        if (int c = a->sig()->name.compare(b->sig()->name)) return c < 0 ? -1 : 1;
      }
      return compare_children(a, b);
    }
    case Term::Kind::Forall: {
      const auto& ba = a->binders();
      const auto& bb = b->binders();
      if (ba.size() != bb.size()) return ba.size() < bb.size() ? -1 : 1;
      for (std::size_t i = 0; i < ba.size(); ++i) {
        if (int c = ba[i].name.compare(bb[i].name)) return c < 0 ? -1 : 1;
        if (int c = compare_sorts(ba[i].sort, bb[i].sort)) return c;
      }
      return compare_raw(a->body().get(), b->body().get());
    }
    case Term::Kind::ToReal:
      return compare_raw(a->children()[0].get(), b->children()[0].get());
  }
  return 0;
}

int compare(const TermPtr& a, const TermPtr& b) { return compare_raw(a.get(), b.get()); }

// --- printing ------------------------------------------------------------------

std::string quote_symbol(const std::string& name) {
  static const std::string extra = "~!@$%^&*_-+=<>.?/";
  bool simple = !name.empty() && !(name[0] >= '0' && name[0] <= '9');
  for (char c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
              extra.find(c) != std::string::npos;
    if (!ok) {
      simple = false;
      break;
    }
  }
  if (simple) return name;
  return "|" + name + "|";
}

namespace {

void append_int_literal(std::string& out, const BigInt& v) {
  if (v < 0) {
    out += "(- ";
    out += BigInt(-v).str();
    out += ")";
  } else {
    out += v.str();
  }
}

void append_rat_literal(std::string& out, const Rat& v) {
  bool neg = v.sign() < 0;
  BigInt num = neg ? BigInt(-v.num()) : v.num();
  if (neg) out += "(- ";
  if (v.den() == 1) {
    out += num.str();
    out += ".0";
  } else {
    out += "(/ ";
    out += num.str();
    out += " ";
    out += v.den().str();
    out += ")";
  }
  if (neg) out += ")";
}

}  // namespace

std::string to_sexpr(const TermPtr& t) {
  std::string out;
  // Work items are either a node to render or a literal snippet to append;
  // explicit stack so deep or-chains don't recurse.
  struct Item {
    const Term* node;
    const char* text;
  };
  std::vector<Item> stack;
  stack.push_back({t.get(), nullptr});
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.text) {
      out += it.text;
      continue;
    }
    const Term* n = it.node;
    switch (n->kind()) {
      case Term::Kind::Var:
        out += quote_symbol(n->name());
        break;
      case Term::Kind::IntLit:
        append_int_literal(out, n->int_value());
        break;
      case Term::Kind::RatLit:
        append_rat_literal(out, n->rat_value());
        break;
      case Term::Kind::BoolLit:
        out += n->bool_value() ? "true" : "false";
        break;
      case Term::Kind::App: {
        out += "(";
        out += n->op() == Op::Apply ? quote_symbol(n->sig()->name) : op_name(n->op());
        stack.push_back({nullptr, ")"});
        for (auto rit = n->children().rbegin(); rit != n->children().rend(); ++rit) {
          stack.push_back({rit->get(), nullptr});
          stack.push_back({nullptr, " "});
        }
        break;
      }
      case Term::Kind::Forall: {
        out += "(forall (";
        bool first = true;
        for (const auto& b : n->binders()) {
          if (!first) out += " ";
          first = false;
          out += "(" + quote_symbol(b.name) + " " + b.sort.to_string() + ")";
        }
        out += ") ";
        stack.push_back({nullptr, ")"});
        stack.push_back({n->body().get(), nullptr});
        break;
      }
      case Term::Kind::ToReal:
        out += "(to_real ";
        stack.push_back({nullptr, ")"});
        stack.push_back({n->children()[0].get(), nullptr});
        break;
    }
  }
  return out;
}

// --- sorting ---------------------------------------------------------------------

namespace {

Sort sort_of_node(const Term* n, const std::unordered_map<const Term*, Sort>& memo) {
  auto child_sort = [&](std::size_t i) -> const Sort& { return memo.at(n->children()[i].get()); };
  auto render = [&](const Term* m) {
    // Const-deleter alias so we can reuse the public printer on a borrowed node.
    return to_sexpr(TermPtr(m, [](const Term*) {}));
  };
  auto want = [&](std::size_t i, const char* expected, bool ok) {
    if (!ok) throw SortError(render(n), expected, child_sort(i).to_string());
  };

  switch (n->kind()) {
    case Term::Kind::Var: return n->var_sort();
    case Term::Kind::IntLit: return Sort::integer();
    case Term::Kind::RatLit: return Sort::real();
    case Term::Kind::BoolLit: return Sort::boolean();
    case Term::Kind::ToReal: {
      want(0, "Int", child_sort(0).base() == Sort::integer());
      return Sort::real();
    }
    case Term::Kind::Forall: {
      want(0, "Bool", child_sort(0).is_bool());
      return Sort::boolean();
    }
    case Term::Kind::App: break;
  }

  switch (n->op()) {
    case Op::Not:
      want(0, "Bool", child_sort(0).is_bool());
      return Sort::boolean();
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff:
      want(0, "Bool", child_sort(0).is_bool());
      want(1, "Bool", child_sort(1).is_bool());
      return Sort::boolean();
    case Op::Eq:
    case Op::Distinct: {
      const Sort& a = child_sort(0);
      const Sort& b = child_sort(1);
      if (a.base() != b.base()) throw SortError(render(n), a.base().to_string(), b.base().to_string());
      return Sort::boolean();
    }
    case Op::Lt:
    case Op::Le: {
      want(0, "Int or Real", child_sort(0).is_arith());
      want(1, "Int or Real", child_sort(1).is_arith());
      if (child_sort(0).base() != child_sort(1).base()) {
        throw SortError(render(n), child_sort(0).base().to_string(), child_sort(1).base().to_string());
      }
      return Sort::boolean();
    }
    case Op::Add:
    case Op::Sub:
    case Op::Mul: {
      want(0, "Int or Real", child_sort(0).is_arith());
      want(1, "Int or Real", child_sort(1).is_arith());
      if (child_sort(0).base() != child_sort(1).base()) {
        throw SortError(render(n), child_sort(0).base().to_string(), child_sort(1).base().to_string());
      }
      return child_sort(0).base();
    }
    case Op::Div: {
      want(0, "Real", child_sort(0).base() == Sort::real());
      want(1, "Real", child_sort(1).base() == Sort::real());
      auto divisor = constant_value(n->children()[1]);
      if (!divisor || divisor->is_zero()) {
        throw SortError("division in " + render(n) + " requires a nonzero constant divisor");
      }
      return Sort::real();
    }
    case Op::Neg:
      want(0, "Int or Real", child_sort(0).is_arith());
      return child_sort(0).base();
    case Op::Apply: {
      const FunSig& sig = *n->sig();
      for (std::size_t i = 0; i < sig.args.size(); ++i) {
        const Sort& got = child_sort(i);
        const Sort& expect = sig.args[i];
        bool ok = expect.is_arith() ? got.base() == expect.base() : got == expect;
        if (!ok) throw SortError(render(n), expect.to_string(), got.to_string());
      }
      return sig.result;
    }
  }
  throw SortError("unreachable operator in " + render(n));
}

}  // namespace

Sort well_sorted(const TermPtr& t) {
  std::unordered_map<const Term*, Sort> memo;
  std::vector<std::pair<const Term*, bool>> stack;
  stack.emplace_back(t.get(), false);
  while (!stack.empty()) {
    auto [n, ready] = stack.back();
    stack.pop_back();
    if (memo.count(n)) continue;
    if (ready) {
      memo.emplace(n, sort_of_node(n, memo));
    } else {
      stack.emplace_back(n, true);
      for (const auto& c : n->children()) {
        if (!memo.count(c.get())) stack.emplace_back(c.get(), false);
      }
    }
  }
  return memo.at(t.get());
}

std::optional<Rat> constant_value(const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::IntLit: return Rat(t->int_value());
    case Term::Kind::RatLit: return t->rat_value();
    case Term::Kind::ToReal: return constant_value(t->children()[0]);
    case Term::Kind::App: break;
    default: return std::nullopt;
  }
  switch (t->op()) {
    case Op::Neg: {
      auto a = constant_value(t->children()[0]);
      if (!a) return std::nullopt;
      return -*a;
    }
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: {
      auto a = constant_value(t->children()[0]);
      auto b = constant_value(t->children()[1]);
      if (!a || !b) return std::nullopt;
      switch (t->op()) {
        case Op::Add: return *a + *b;
        case Op::Sub: return *a - *b;
        case Op::Mul: return *a * *b;
        default:
          if (b->is_zero()) return std::nullopt;
          return *a / *b;
      }
    }
    default: return std::nullopt;
  }
  return std::nullopt;
}

// --- clause view --------------------------------------------------------------

ClauseView ClauseView::from_term(const TermPtr& t) {
  if (t->is_false()) return ClauseView();
  return ClauseView(flatten_chain(Op::Or, t));
}

TermPtr ClauseView::to_term() const {
  if (lits_.empty()) return mk_false();
  TermPtr acc = lits_.back();
  for (std::size_t i = lits_.size() - 1; i-- > 0;) acc = mk_or(lits_[i], acc);
  return acc;
}

bool ClauseView::operator==(const ClauseView& o) const {
  if (lits_.size() != o.lits_.size()) return false;
  for (std::size_t i = 0; i < lits_.size(); ++i) {
    if (!equal(lits_[i], o.lits_[i])) return false;
  }
  return true;
}

std::vector<TermPtr> flatten_chain(Op op, const TermPtr& t) {
  std::vector<TermPtr> out;
  TermPtr cur = t;
  while (cur->is_app(op)) {
    out.push_back(cur->children()[0]);
    cur = cur->children()[1];
  }
  out.push_back(cur);
  return out;
}

// --- traversal ------------------------------------------------------------------

namespace {

TermPtr transform_rec(const TermPtr& t, const std::function<TermPtr(const TermPtr&)>& fn,
                      std::unordered_map<const Term*, TermPtr>& memo) {
  if (auto it = memo.find(t.get()); it != memo.end()) return it->second;
  TermPtr rebuilt = t;
  if (!t->children().empty()) {
    std::vector<TermPtr> kids;
    kids.reserve(t->children().size());
    bool changed = false;
    for (const auto& c : t->children()) {
      kids.push_back(transform_rec(c, fn, memo));
      changed |= kids.back().get() != c.get();
    }
    if (changed) {
      switch (t->kind()) {
        case Term::Kind::App:
          rebuilt = t->op() == Op::Apply ? mk_apply(t->sig(), std::move(kids))
                                         : mk_app(t->op(), std::move(kids));
          break;
        case Term::Kind::Forall:
          rebuilt = mk_forall(t->binders(), std::move(kids[0]));
          break;
        case Term::Kind::ToReal:
          rebuilt = mk_to_real(std::move(kids[0]));
          break;
        default:
          break;
      }
    }
  }
  TermPtr out = fn(rebuilt);
  memo.emplace(t.get(), out);
  return out;
}

}  // namespace

TermPtr transform(const TermPtr& t, const std::function<TermPtr(const TermPtr&)>& fn) {
  std::unordered_map<const Term*, TermPtr> memo;
  return transform_rec(t, fn, memo);
}

bool contains(const TermPtr& t, const std::function<bool(const TermPtr&)>& pred) {
  bool found = false;
  std::unordered_map<const Term*, bool> seen;
  std::vector<TermPtr> stack{t};
  while (!stack.empty() && !found) {
    TermPtr n = std::move(stack.back());
    stack.pop_back();
    if (seen.count(n.get())) continue;
    seen.emplace(n.get(), true);
    if (pred(n)) {
      found = true;
      break;
    }
    for (const auto& c : n->children()) stack.push_back(c);
  }
  return found;
}

}  // namespace cpck
