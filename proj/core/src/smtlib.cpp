#include "cpck/smtlib.hpp"

#include <algorithm>
#include <cctype>

namespace cpck {

// --- lexer / reader ------------------------------------------------------------

namespace {

bool is_simple_symbol_char(char c) {
  static const std::string extra = "~!@$%^&*_-+=<>.?/";
  return std::isalnum(static_cast<unsigned char>(c)) || extra.find(c) != std::string::npos;
}

class Reader {
public:
  explicit Reader(std::string_view in) : in_(in) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    skip_space();
    while (!at_end()) {
      out.push_back(read_one());
      skip_space();
    }
    return out;
  }

private:
  bool at_end() const { return pos_ >= in_.size(); }
  char peek() const { return in_[pos_]; }

  char advance() {
    char c = in_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (!at_end()) {
      char c = peek();
      if (c == ';') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

  SExpr read_one() {
    int line = line_, col = col_;
    char c = peek();
    if (c == '(') {
      advance();
      SExpr list;
      list.type = SExpr::Type::List;
      list.line = line;
      list.col = col;
      skip_space();
      while (true) {
        if (at_end()) throw ParseError(line, col, "unterminated '('");
        if (peek() == ')') {
          advance();
          return list;
        }
        list.items.push_back(read_one());
        skip_space();
      }
    }
    if (c == ')') fail("unexpected ')'");
    if (c == '|') return read_quoted(line, col);
    if (c == ':') return read_keyword(line, col);
    if (std::isdigit(static_cast<unsigned char>(c))) return read_number(line, col);
    if (is_simple_symbol_char(c)) return read_symbol(line, col);
    fail(std::string("unexpected character '") + c + "'");
  }

  SExpr read_quoted(int line, int col) {
    advance();  // opening '|'
    std::string text;
    while (true) {
      if (at_end()) throw ParseError(line, col, "unterminated '|' symbol");
      char c = advance();
      if (c == '|') break;
      if (c == '\\') throw ParseError(line, col, "'\\' is not allowed inside '|' symbols");
      text += c;
    }
    SExpr e;
    e.type = SExpr::Type::Symbol;
    e.text = std::move(text);
    e.line = line;
    e.col = col;
    return e;
  }

  SExpr read_keyword(int line, int col) {
    advance();  // ':'
    std::string text;
    while (!at_end() && is_simple_symbol_char(peek())) text += advance();
    if (text.empty()) fail("':' must begin a keyword");
    SExpr e;
    e.type = SExpr::Type::Keyword;
    e.text = std::move(text);
    e.line = line;
    e.col = col;
    return e;
  }

  SExpr read_number(int line, int col) {
    std::string text;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) text += advance();
    if (text.size() > 1 && text[0] == '0' && (at_end() || peek() != '.')) {
      fail("numerals must not have leading zeros");
    }
    bool decimal = false;
    if (!at_end() && peek() == '.') {
      decimal = true;
      text += advance();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("digits required after '.'");
      }
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) text += advance();
    }
    if (!at_end() && is_simple_symbol_char(peek())) fail("malformed numeral");
    SExpr e;
    e.type = decimal ? SExpr::Type::Decimal : SExpr::Type::Numeral;
    e.text = std::move(text);
    e.line = line;
    e.col = col;
    return e;
  }

  SExpr read_symbol(int line, int col) {
    std::string text;
    while (!at_end() && is_simple_symbol_char(peek())) text += advance();
    SExpr e;
    e.type = SExpr::Type::Symbol;
    e.text = std::move(text);
    e.line = line;
    e.col = col;
    return e;
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view input) { return Reader(input).read_all(); }

// --- sorts -------------------------------------------------------------------------

std::string render_sort(const Sort& s) { return quote_symbol(s.to_string()); }

Sort parse_sort(const SExpr& e, const Signature& sig) {
  if (e.type != SExpr::Type::Symbol) {
    throw ParseError(e.line, e.col, "expected a sort symbol");
  }
  if (e.text == "Bool") return Sort::boolean();
  if (e.text == "Int") return Sort::integer();
  if (e.text == "Real") return Sort::real();
  if (e.text == "Nat") {
    if (sig.allow_nat) return Sort::natural();
    throw ParseError(e.line, e.col, "unknown sort 'Nat'");
  }
  if (sig.sorts.count(e.text)) return Sort::uninterpreted(e.text);
  throw ParseError(e.line, e.col, "unknown sort '" + e.text + "'");
}

// --- terms -------------------------------------------------------------------------

namespace {

Rat decimal_to_rat(const std::string& text) {
  auto dot = text.find('.');
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  // cpp_int's string constructor treats a leading 0 as an octal prefix.
  while (digits.size() > 1 && digits[0] == '0') digits.erase(digits.begin());
  BigInt num(digits);
  BigInt den = 1;
  for (std::size_t i = dot + 1; i < text.size(); ++i) den *= 10;
  return Rat(num, den);
}

class TermParser {
public:
  explicit TermParser(const Signature& sig) : sig_(sig) {}

  TermPtr parse(const SExpr& e) {
    switch (e.type) {
      case SExpr::Type::Numeral: return mk_int(BigInt(e.text));
      case SExpr::Type::Decimal: return mk_rat(decimal_to_rat(e.text));
      case SExpr::Type::Keyword: throw ParseError(e.line, e.col, "keyword in term position");
      case SExpr::Type::Symbol: return parse_symbol(e);
      case SExpr::Type::List: return parse_list(e);
    }
    throw ParseError(e.line, e.col, "bad term");
  }

private:
  TermPtr parse_symbol(const SExpr& e) {
    if (e.text == "true") return mk_true();
    if (e.text == "false") return mk_false();
    // Innermost scope wins.  A let-bound value must not mention a variable
    // that a binder between the let and this occurrence re-binds: inserting it
    // here would silently capture, so reject instead.
    std::set<std::string> crossed;
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      if (auto hit = it->bindings.find(e.text); hit != it->bindings.end()) {
        if (!it->from_binder && !crossed.empty()) {
          const TermPtr& value = hit->second;
          for (const auto& name : crossed) {
            if (contains(value, [&](const TermPtr& n) {
                  return n->kind() == Term::Kind::Var && n->name() == name;
                })) {
              throw ParseError(e.line, e.col,
                               "expanding let binding '" + e.text + "' here would capture binder '" +
                                   name + "'");
            }
          }
        }
        return hit->second;
      }
      if (it->from_binder) {
        for (const auto& [name, term] : it->bindings) crossed.insert(name);
      }
    }
    if (auto hit = sig_.consts.find(e.text); hit != sig_.consts.end()) return hit->second;
    if (auto hit = sig_.macros.find(e.text); hit != sig_.macros.end()) {
      if (hit->second.params.empty()) return hit->second.body;
    }
    throw ParseError(e.line, e.col, "unknown symbol '" + e.text + "'");
  }

  TermPtr parse_list(const SExpr& e) {
    if (e.items.empty()) throw ParseError(e.line, e.col, "empty application");
    const SExpr& head = e.items[0];
    if (head.type != SExpr::Type::Symbol) {
      throw ParseError(head.line, head.col, "expected an operator or function symbol");
    }
    std::size_t n = e.items.size() - 1;
    const std::string& op = head.text;

    if (op == "forall") return parse_forall(e);
    if (op == "let") return parse_let(e);
    if (op == "to_real") {
      need(e, n == 1, "to_real takes one operand");
      return mk_to_real(parse(e.items[1]));
    }
    if (op == "not") {
      need(e, n == 1, "not takes one operand");
      return mk_not(parse(e.items[1]));
    }
    if (op == "and" || op == "or") {
      need(e, n >= 2, op + " takes at least two operands");
      return fold_right(op == "and" ? Op::And : Op::Or, e);
    }
    if (op == "=>") {
      need(e, n >= 2, "=> takes at least two operands");
      return fold_right(Op::Implies, e);
    }
    if (op == "iff") {
      if (!sig_.allow_iff) throw ParseError(e.line, e.col, "unknown symbol 'iff'");
      need(e, n == 2, "iff takes two operands");
      return mk_iff(parse(e.items[1]), parse(e.items[2]));
    }
    if (op == "=" || op == "distinct") {
      need(e, n == 2, op + " takes two operands here");
      auto a = parse(e.items[1]);
      auto b = parse(e.items[2]);
      return op == "=" ? mk_eq(a, b) : mk_distinct(a, b);
    }
    if (op == "<" || op == "<=" || op == ">" || op == ">=") {
      need(e, n == 2, op + " takes two operands");
      auto a = parse(e.items[1]);
      auto b = parse(e.items[2]);
      if (op == "<") return mk_lt(a, b);
      if (op == "<=") return mk_le(a, b);
      if (op == ">") return mk_gt(a, b);
      return mk_ge(a, b);
    }
    if (op == "+" || op == "*") {
      need(e, n >= 2, op + " takes at least two operands");
      return fold_left(op == "+" ? Op::Add : Op::Mul, e);
    }
    if (op == "-") {
      need(e, n >= 1, "- takes at least one operand");
      if (n == 1) {
        TermPtr a = parse(e.items[1]);
        // Fold negation into literals so (- 5) and (- (/ 1 2)) read back as
        // the literal values the printer writes.
        if (a->kind() == Term::Kind::IntLit) return mk_int(BigInt(-a->int_value()));
        if (a->kind() == Term::Kind::RatLit) return mk_rat(-a->rat_value());
        return mk_neg(a);
      }
      return fold_left(Op::Sub, e);
    }
    if (op == "/") {
      need(e, n == 2, "/ takes two operands");
      TermPtr a = parse(e.items[1]);
      TermPtr b = parse(e.items[2]);
      if (a->kind() == Term::Kind::IntLit && b->kind() == Term::Kind::IntLit) {
        if (b->int_value() == 0) throw ParseError(e.line, e.col, "rational literal with denominator 0");
        return mk_rat(Rat(a->int_value(), b->int_value()));
      }
      return mk_div(a, b);
    }

    // Function application or macro expansion.
    if (auto hit = sig_.funs.find(op); hit != sig_.funs.end()) {
      const FunSigPtr& sig = hit->second;
      need(e, n == sig->args.size(),
           op + " takes " + std::to_string(sig->args.size()) + " arguments");
      std::vector<TermPtr> args;
      args.reserve(n);
      for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(parse(e.items[i]));
      return mk_apply(sig, std::move(args));
    }
    if (auto hit = sig_.macros.find(op); hit != sig_.macros.end()) {
      const Macro& mac = hit->second;
      need(e, n == mac.params.size(),
           op + " takes " + std::to_string(mac.params.size()) + " arguments");
      std::map<std::string, TermPtr> map;
      for (std::size_t i = 0; i < n; ++i) map[mac.params[i].name] = parse(e.items[i + 1]);
      return substitute(mac.body, map, e);
    }
    throw ParseError(head.line, head.col, "unknown symbol '" + op + "'");
  }

  TermPtr parse_forall(const SExpr& e) {
    need(e, e.items.size() == 3, "forall takes a binder list and a body");
    const SExpr& blist = e.items[1];
    if (!blist.is_list() || blist.items.empty()) {
      throw ParseError(e.items[1].line, e.items[1].col, "forall needs at least one binder");
    }
    std::vector<Binding> binders;
    std::map<std::string, TermPtr> scope;
    for (const SExpr& b : blist.items) {
      if (!b.is_list() || b.items.size() != 2 || b.items[0].type != SExpr::Type::Symbol) {
        throw ParseError(b.line, b.col, "binder must be (name Sort)");
      }
      Sort sort = parse_sort(b.items[1], sig_);
      if (sort.is_nat() && !sig_.allow_nat) {
        throw ParseError(b.items[1].line, b.items[1].col, "unknown sort 'Nat'");
      }
      const std::string& name = b.items[0].text;
      if (scope.count(name)) throw ParseError(b.line, b.col, "duplicate binder '" + name + "'");
      binders.push_back({name, sort});
      scope[name] = mk_var(name, sort);
    }
    scopes_.push_back({true, std::move(scope)});
    TermPtr body = parse(e.items[2]);
    scopes_.pop_back();
    return mk_forall(std::move(binders), std::move(body));
  }

  TermPtr parse_let(const SExpr& e) {
    need(e, e.items.size() == 3, "let takes a binding list and a body");
    const SExpr& blist = e.items[1];
    if (!blist.is_list() || blist.items.empty()) {
      throw ParseError(e.items[1].line, e.items[1].col, "let needs at least one binding");
    }
    std::map<std::string, TermPtr> scope;
    for (const SExpr& b : blist.items) {
      if (!b.is_list() || b.items.size() != 2 || b.items[0].type != SExpr::Type::Symbol) {
        throw ParseError(b.line, b.col, "let binding must be (name term)");
      }
      if (scope.count(b.items[0].text)) {
        throw ParseError(b.line, b.col, "duplicate let binding '" + b.items[0].text + "'");
      }
      // Parallel let: right-hand sides see the outer scope only.
      scope[b.items[0].text] = parse(b.items[1]);
    }
    scopes_.push_back({false, std::move(scope)});
    TermPtr body = parse(e.items[2]);
    scopes_.pop_back();
    return body;
  }

  TermPtr fold_right(Op op, const SExpr& e) {
    std::vector<TermPtr> args;
    for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(parse(e.items[i]));
    TermPtr acc = args.back();
    for (std::size_t i = args.size() - 1; i-- > 0;) acc = mk_app(op, {args[i], acc});
    return acc;
  }

  TermPtr fold_left(Op op, const SExpr& e) {
    TermPtr acc = parse(e.items[1]);
    for (std::size_t i = 2; i < e.items.size(); ++i) acc = mk_app(op, {acc, parse(e.items[i])});
    return acc;
  }

  static void need(const SExpr& e, bool ok, const std::string& msg) {
    if (!ok) throw ParseError(e.line, e.col, msg);
  }

  // Substitution of macro parameters.  A binder occurring in the body shadows
  // a parameter of the same name; an argument whose variables a body binder
  // would capture is rejected with a parse error rather than misbound.
  static TermPtr substitute(const TermPtr& t, const std::map<std::string, TermPtr>& map,
                            const SExpr& site) {
    if (map.empty()) return t;
    switch (t->kind()) {
      case Term::Kind::Var: {
        auto it = map.find(t->name());
        return it == map.end() ? t : it->second;
      }
      case Term::Kind::Forall: {
        auto inner = map;
        for (const auto& b : t->binders()) inner.erase(b.name);
        for (const auto& [param, replacement] : inner) {
          bool used = contains(t->body(), [&](const TermPtr& n) {
            return n->kind() == Term::Kind::Var && n->name() == param;
          });
          if (!used) continue;
          for (const auto& b : t->binders()) {
            if (contains(replacement, [&](const TermPtr& n) {
                  return n->kind() == Term::Kind::Var && n->name() == b.name;
                })) {
              throw ParseError(site.line, site.col,
                               "argument for '" + param + "' would be captured by binder '" +
                                   b.name + "'");
            }
          }
        }
        TermPtr body = substitute(t->body(), inner, site);
        return body.get() == t->body().get() ? t : mk_forall(t->binders(), body);
      }
      case Term::Kind::App:
      case Term::Kind::ToReal: {
        std::vector<TermPtr> kids;
        kids.reserve(t->children().size());
        bool changed = false;
        for (const auto& c : t->children()) {
          kids.push_back(substitute(c, map, site));
          changed |= kids.back().get() != c.get();
        }
        if (!changed) return t;
        if (t->kind() == Term::Kind::ToReal) return mk_to_real(std::move(kids[0]));
        return t->op() == Op::Apply ? mk_apply(t->sig(), std::move(kids))
                                    : mk_app(t->op(), std::move(kids));
      }
      default: return t;
    }
  }

  struct Scope {
    bool from_binder;  // forall binders, as opposed to let bindings
    std::map<std::string, TermPtr> bindings;
  };

  const Signature& sig_;
  std::vector<Scope> scopes_;
};

}  // namespace

TermPtr parse_term(const SExpr& e, const Signature& sig) { return TermParser(sig).parse(e); }

// --- scripts --------------------------------------------------------------------------

bool Script::operator==(const Script& o) const {
  if (logic != o.logic || sorts != o.sorts || check_sat != o.check_sat) return false;
  if (!(consts == o.consts)) return false;
  if (funs.size() != o.funs.size()) return false;
  for (std::size_t i = 0; i < funs.size(); ++i) {
    if (!(*funs[i] == *o.funs[i])) return false;
  }
  if (assertions.size() != o.assertions.size()) return false;
  for (std::size_t i = 0; i < assertions.size(); ++i) {
    if (!equal(assertions[i], o.assertions[i])) return false;
  }
  return true;
}

Signature Script::signature() const {
  Signature sig;
  for (const auto& s : sorts) sig.sorts.insert(s);
  for (const auto& c : consts) sig.consts[c.name] = mk_var(c.name, c.sort);
  for (const auto& f : funs) sig.funs[f->name] = f;
  return sig;
}

namespace {

class ScriptParser {
public:
  Script run(std::string_view input) {
    for (const SExpr& e : read_sexprs(input)) command(e);
    return std::move(script_);
  }

private:
  void command(const SExpr& e) {
    if (!e.is_list() || e.items.empty() || e.items[0].type != SExpr::Type::Symbol) {
      throw ParseError(e.line, e.col, "expected a command");
    }
    const std::string& cmd = e.items[0].text;
    if (cmd == "set-logic") {
      need(e, e.items.size() == 2 && e.items[1].type == SExpr::Type::Symbol,
           "set-logic takes a symbol");
      script_.logic = e.items[1].text;
    } else if (cmd == "set-info" || cmd == "set-option") {
      // Recorded nowhere; accepted for compatibility.
    } else if (cmd == "declare-sort") {
      declare_sort(e);
    } else if (cmd == "declare-const") {
      declare_const(e);
    } else if (cmd == "declare-fun") {
      declare_fun(e);
    } else if (cmd == "define-fun") {
      define_fun(e);
    } else if (cmd == "assert") {
      need(e, e.items.size() == 2, "assert takes one term");
      TermPtr t = parse_term(e.items[1], sig_);
      Sort s = well_sorted(t);
      if (!s.is_bool()) {
        throw ParseError(e.items[1].line, e.items[1].col,
                         "asserted term has sort " + s.to_string() + ", expected Bool");
      }
      script_.assertions.push_back(std::move(t));
    } else if (cmd == "check-sat") {
      need(e, e.items.size() == 1, "check-sat takes no arguments");
      script_.check_sat = true;
    } else {
      throw ParseError(e.line, e.col, "unsupported command '" + cmd + "'");
    }
  }

  void declare_sort(const SExpr& e) {
    need(e, e.items.size() == 3 && e.items[1].type == SExpr::Type::Symbol,
         "declare-sort takes a name and an arity");
    const SExpr& arity = e.items[2];
    if (arity.type != SExpr::Type::Numeral || arity.text != "0") {
      throw ParseError(arity.line, arity.col, "only arity 0 sorts are supported");
    }
    const std::string& name = e.items[1].text;
    if (name == "Bool" || name == "Int" || name == "Real" || sig_.sorts.count(name)) {
      throw ParseError(e.items[1].line, e.items[1].col, "sort '" + name + "' already exists");
    }
    sig_.sorts.insert(name);
    script_.sorts.push_back(name);
  }

  void declare_const(const SExpr& e) {
    need(e, e.items.size() == 3 && e.items[1].type == SExpr::Type::Symbol,
         "declare-const takes a name and a sort");
    add_const(e.items[1], parse_sort(e.items[2], sig_));
  }

  void declare_fun(const SExpr& e) {
    need(e, e.items.size() == 4 && e.items[1].type == SExpr::Type::Symbol && e.items[2].is_list(),
         "declare-fun takes a name, a domain list and a result sort");
    Sort result = parse_sort(e.items[3], sig_);
    if (e.items[2].items.empty()) {
      add_const(e.items[1], result);  // zero-ary function is a constant
      return;
    }
    std::vector<Sort> domain;
    for (const SExpr& s : e.items[2].items) domain.push_back(parse_sort(s, sig_));
    check_fresh(e.items[1]);
    FunSigPtr f = mk_fun_sig(e.items[1].text, std::move(domain), result);
    sig_.funs[f->name] = f;
    script_.funs.push_back(std::move(f));
  }

  void define_fun(const SExpr& e) {
    need(e, e.items.size() == 5 && e.items[1].type == SExpr::Type::Symbol && e.items[2].is_list(),
         "define-fun takes a name, parameters, a result sort and a body");
    check_fresh(e.items[1]);
    Macro mac;
    Signature inner = sig_;
    for (const SExpr& p : e.items[2].items) {
      if (!p.is_list() || p.items.size() != 2 || p.items[0].type != SExpr::Type::Symbol) {
        throw ParseError(p.line, p.col, "parameter must be (name Sort)");
      }
      Sort s = parse_sort(p.items[1], sig_);
      mac.params.push_back({p.items[0].text, s});
      inner.consts[p.items[0].text] = mk_var(p.items[0].text, s);
    }
    Sort declared = parse_sort(e.items[3], sig_);
    mac.body = parse_term(e.items[4], inner);
    Sort actual = well_sorted(mac.body);
    if (actual != declared) {
      throw ParseError(e.items[4].line, e.items[4].col,
                       "define-fun body has sort " + actual.to_string() + ", expected " +
                           declared.to_string());
    }
    sig_.macros[e.items[1].text] = std::move(mac);
  }

  void add_const(const SExpr& name, Sort sort) {
    check_fresh(name);
    sig_.consts[name.text] = mk_var(name.text, sort);
    script_.consts.push_back({name.text, std::move(sort)});
  }

  void check_fresh(const SExpr& name) {
    if (sig_.knows(name.text)) {
      throw ParseError(name.line, name.col, "symbol '" + name.text + "' already declared");
    }
  }

  static void need(const SExpr& e, bool ok, const std::string& msg) {
    if (!ok) throw ParseError(e.line, e.col, msg);
  }

  Script script_;
  Signature sig_;
};

}  // namespace

Script parse_script(std::string_view input) { return ScriptParser().run(input); }

std::string print_script(const Script& s) {
  std::string out;
  if (!s.logic.empty()) out += "(set-logic " + s.logic + ")\n";
  for (const auto& name : s.sorts) out += "(declare-sort " + quote_symbol(name) + " 0)\n";
  for (const auto& c : s.consts) {
    out += "(declare-const " + quote_symbol(c.name) + " " + render_sort(c.sort) + ")\n";
  }
  for (const auto& f : s.funs) {
    out += "(declare-fun " + quote_symbol(f->name) + " (";
    for (std::size_t i = 0; i < f->args.size(); ++i) {
      if (i) out += " ";
      out += render_sort(f->args[i]);
    }
    out += ") " + render_sort(f->result) + ")\n";
  }
  for (const auto& a : s.assertions) out += "(assert " + to_sexpr(a) + ")\n";
  if (s.check_sat) out += "(check-sat)\n";
  return out;
}

}  // namespace cpck
