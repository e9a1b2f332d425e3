#include <doctest.h>

#include <string>
#include <vector>

#include "cpck/smtlib.hpp"
#include "cpck/term.hpp"
#include "support/generators.hpp"

using namespace cpck;
namespace gen = cpck::testgen;

namespace {

Signature basic_sig() {
  Signature sig;
  for (const char* n : {"p", "q", "r"}) sig.consts[n] = mk_var(n, Sort::boolean());
  for (const char* n : {"x", "y"}) sig.consts[n] = mk_var(n, Sort::integer());
  for (const char* n : {"u", "v"}) sig.consts[n] = mk_var(n, Sort::real());
  return sig;
}

TermPtr parse1(const std::string& text, const Signature& sig) {
  auto es = read_sexprs(text);
  REQUIRE(es.size() == 1);
  return parse_term(es[0], sig);
}

TermPtr parse1(const std::string& text) { return parse1(text, basic_sig()); }

}  // namespace

TEST_CASE("reader produces typed atoms with positions") {
  auto es = read_sexprs("(step s1 2.5 :rule res) 42 |two words|");
  REQUIRE(es.size() == 3);

  const SExpr& list = es[0];
  REQUIRE(list.is_list());
  REQUIRE(list.items.size() == 5);
  CHECK(list.items[0].type == SExpr::Type::Symbol);
  CHECK(list.items[0].text == "step");
  CHECK(list.items[2].type == SExpr::Type::Decimal);
  CHECK(list.items[2].text == "2.5");
  CHECK(list.items[3].type == SExpr::Type::Keyword);
  CHECK(list.items[3].text == "rule");
  CHECK(list.items[4].type == SExpr::Type::Symbol);
  CHECK(list.items[4].text == "res");

  CHECK(es[1].type == SExpr::Type::Numeral);
  CHECK(es[1].text == "42");
  CHECK(es[2].type == SExpr::Type::Symbol);
  CHECK(es[2].text == "two words");  // bars are stripped

  CHECK(list.line == 1);
  CHECK(list.col == 1);
  CHECK(list.items[1].col == 7);   // s1
  CHECK(es[1].col == 25);          // 42
}

TEST_CASE("reader tracks line numbers and skips comments") {
  auto es = read_sexprs("; header comment\n(a ; inline\n  b)\n");
  REQUIRE(es.size() == 1);
  CHECK(es[0].line == 2);
  REQUIRE(es[0].items.size() == 2);
  CHECK(es[0].items[1].line == 3);
  CHECK(es[0].items[1].col == 3);
}

TEST_CASE("reader rejects malformed input") {
  CHECK_THROWS_AS(read_sexprs(")"), ParseError);
  CHECK_THROWS_AS(read_sexprs("(a b"), ParseError);
  CHECK_THROWS_AS(read_sexprs("|open"), ParseError);
  CHECK_THROWS_AS(read_sexprs("|back\\slash|"), ParseError);
  CHECK_THROWS_AS(read_sexprs("007"), ParseError);  // leading zeros are ambiguous
  CHECK_THROWS_AS(read_sexprs("1."), ParseError);
  CHECK_THROWS_AS(read_sexprs("12abc"), ParseError);
  CHECK_THROWS_AS(read_sexprs(":"), ParseError);
  CHECK_THROWS_AS(read_sexprs("[a]"), ParseError);
  CHECK_NOTHROW(read_sexprs("0"));
  CHECK_NOTHROW(read_sexprs("0.5"));

  try {
    read_sexprs("(a\n  b))");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 5);
  }
}

TEST_CASE("n-ary connectives fold right, arithmetic folds left") {
  Signature sig = basic_sig();
  TermPtr p = sig.consts["p"], q = sig.consts["q"], r = sig.consts["r"];
  TermPtr x = sig.consts["x"], y = sig.consts["y"];

  CHECK(equal(parse1("(or p q r)"), mk_or(p, mk_or(q, r))));
  CHECK(equal(parse1("(and p q r)"), mk_and(p, mk_and(q, r))));
  CHECK(equal(parse1("(=> p q r)"), mk_implies(p, mk_implies(q, r))));
  CHECK(equal(parse1("(+ x y 1)"), mk_add(mk_add(x, y), mk_int(1))));
  CHECK(equal(parse1("(* x x y)"), mk_mul(mk_mul(x, x), y)));
  CHECK(equal(parse1("(- x y 1)"), mk_sub(mk_sub(x, y), mk_int(1))));
}

TEST_CASE("equality and distinct stay strictly binary") {
  CHECK_THROWS_AS(parse1("(= x y 1)"), ParseError);
  CHECK_THROWS_AS(parse1("(distinct x y 1)"), ParseError);
  CHECK(parse1("(= x y)")->is_app(Op::Eq));
  CHECK(parse1("(distinct x y)")->is_app(Op::Distinct));
}

TEST_CASE("ordered comparisons normalize while parsing") {
  Signature sig = basic_sig();
  TermPtr x = sig.consts["x"], y = sig.consts["y"];
  CHECK(equal(parse1("(> x y)"), mk_lt(y, x)));
  CHECK(equal(parse1("(>= x y)"), mk_le(y, x)));
  CHECK(equal(parse1("(< x y)"), mk_lt(x, y)));
}

TEST_CASE("negative literals and rational literals") {
  CHECK(parse1("(- 5)")->kind() == Term::Kind::IntLit);
  CHECK(parse1("(- 5)")->int_value() == -5);
  CHECK(parse1("(- 2.5)")->rat_value() == Rat(BigInt(-5), BigInt(2)));
  CHECK(parse1("(/ 1 2)")->kind() == Term::Kind::RatLit);
  CHECK(parse1("(/ 1 2)")->rat_value() == Rat(BigInt(1), BigInt(2)));
  CHECK(equal(parse1("(- (/ 1 2))"), mk_rat(Rat(BigInt(-1), BigInt(2)))));
  CHECK(parse1("0.5")->rat_value() == Rat(BigInt(1), BigInt(2)));
  CHECK(parse1("2.50")->rat_value() == Rat(BigInt(5), BigInt(2)));
  CHECK_THROWS_AS(parse1("(/ 1 0)"), ParseError);
  // Non-literal division stays a division node.
  CHECK(parse1("(/ u 2.0)")->is_app(Op::Div));
  // Unary minus on a non-literal stays a negation node.
  CHECK(parse1("(- x)")->is_app(Op::Neg));
}

TEST_CASE("iff and Nat are opt-in extensions") {
  CHECK_THROWS_AS(parse1("(iff p q)"), ParseError);
  CHECK_THROWS_AS(parse1("(forall ((n Nat)) true)"), ParseError);

  Signature sig = basic_sig();
  sig.allow_iff = true;
  sig.allow_nat = true;
  CHECK(equal(parse1("(iff p q)", sig), mk_iff(sig.consts["p"], sig.consts["q"])));
  TermPtr fa = parse1("(forall ((n Nat)) (<= 0 n))", sig);
  REQUIRE(fa->kind() == Term::Kind::Forall);
  CHECK(fa->binders()[0].sort == Sort::natural());
}

TEST_CASE("forall parsing: scoping, shadowing, duplicate binders") {
  Signature sig = basic_sig();
  TermPtr fa = parse1("(forall ((k Int) (m Int)) (< k m))", sig);
  REQUIRE(fa->kind() == Term::Kind::Forall);
  CHECK(fa->binders().size() == 2);
  CHECK(equal(fa->body(), mk_lt(mk_var("k", Sort::integer()), mk_var("m", Sort::integer()))));

  // A binder shadows a global constant of the same name.
  TermPtr shadow = parse1("(forall ((x Real)) (< x 1.0))", sig);
  CHECK(shadow->body()->children()[0]->var_sort() == Sort::real());

  CHECK_THROWS_AS(parse1("(forall ((k Int) (k Int)) true)", sig), ParseError);
  CHECK_THROWS_AS(parse1("(forall () true)", sig), ParseError);
  CHECK_THROWS_AS(parse1("(forall ((k Unknown)) true)", sig), ParseError);
}

TEST_CASE("let expands to the bound term") {
  Signature sig = basic_sig();
  TermPtr x = sig.consts["x"], y = sig.consts["y"];
  CHECK(equal(parse1("(let ((t (+ x 1))) (* t t))", sig),
              mk_mul(mk_add(x, mk_int(1)), mk_add(x, mk_int(1)))));
  // Parallel semantics: right-hand sides see only the outer scope.
  CHECK(equal(parse1("(let ((a x) (x y)) (+ a x))", sig), mk_add(x, y)));
  // Inner binder shadows the let binding.
  TermPtr fa = parse1("(let ((t x)) (forall ((t Int)) (< t 0)))", sig);
  CHECK(equal(fa->body(), mk_lt(mk_var("t", Sort::integer()), mk_int(0))));

  CHECK_THROWS_AS(parse1("(let ((t x) (t y)) t)", sig), ParseError);
  CHECK_THROWS_AS(parse1("(let () x)", sig), ParseError);
}

TEST_CASE("expansions that would capture a binder are rejected") {
  Signature sig = basic_sig();
  // The let value mentions x; expanding it under a binder that re-binds x
  // would change which variable the occurrence refers to.
  CHECK_THROWS_AS(parse1("(let ((t (+ x 1))) (forall ((x Int)) (< t x)))", sig), ParseError);
  // Same value used outside the binder is fine.
  CHECK_NOTHROW(parse1("(let ((t (+ x 1))) (and (< t 9) (forall ((k Int)) (< k t))))", sig));
  try {
    parse1("(let ((t (+ x 1))) (forall ((x Int)) (< t x)))", sig);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.message.find("capture") != std::string::npos);
  }
}

TEST_CASE("parse_term reports accurate positions") {
  try {
    parse1("(or p zz)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
    CHECK(e.col == 7);
    CHECK(e.message == "unknown symbol 'zz'");
  }
  CHECK_THROWS_AS(parse1("()"), ParseError);
  CHECK_THROWS_AS(parse1(":kw"), ParseError);
  CHECK_THROWS_AS(parse1("(not p q)"), ParseError);
  CHECK_THROWS_AS(parse1("(to_real x y)"), ParseError);
}

TEST_CASE("scripts parse declarations, assertions and check-sat") {
  Script s = parse_script(
      "(set-logic QF_UF)\n"
      "(declare-sort G 0)\n"
      "(declare-const g G)\n"
      "(declare-const b Bool)\n"
      "(declare-fun f (G Int) G)\n"
      "(declare-fun c () Int)\n"  // zero-ary function is a constant
      "(set-info :source |test|)\n"
      "(assert (= (f g c) g))\n"
      "(assert b)\n"
      "(check-sat)\n");
  CHECK(s.logic == "QF_UF");
  CHECK(s.sorts == std::vector<std::string>{"G"});
  REQUIRE(s.consts.size() == 3);
  CHECK(s.consts[0].name == "g");
  CHECK(s.consts[2].name == "c");
  CHECK(s.consts[2].sort == Sort::integer());
  REQUIRE(s.funs.size() == 1);
  CHECK(s.funs[0]->name == "f");
  CHECK(s.funs[0]->args.size() == 2);
  CHECK(s.assertions.size() == 2);
  CHECK(s.check_sat);

  Signature sig = s.signature();
  CHECK(sig.knows("f"));
  CHECK(sig.knows("g"));
  CHECK_FALSE(sig.knows("nope"));
}

TEST_CASE("define-fun bodies expand inline") {
  Script s = parse_script(
      "(declare-const x Int)\n"
      "(define-fun sq ((a Int)) Int (* a a))\n"
      "(define-fun always () Bool true)\n"
      "(assert (< (sq (+ x 1)) 10))\n"
      "(assert always)\n");
  REQUIRE(s.assertions.size() == 2);
  TermPtr x = mk_var("x", Sort::integer());
  TermPtr xp1 = mk_add(x, mk_int(1));
  CHECK(equal(s.assertions[0], mk_lt(mk_mul(xp1, xp1), mk_int(10))));
  CHECK(s.assertions[1]->is_true());
  // Macros leave no trace in the script structure.
  CHECK(s.funs.empty());
  CHECK(s.consts.size() == 1);
}

TEST_CASE("define-fun checks its declared sort and arity") {
  CHECK_THROWS_AS(parse_script("(define-fun f ((a Int)) Bool (+ a 1))"), ParseError);
  CHECK_THROWS_AS(parse_script("(define-fun f ((a Int)) Int (* a a))\n"
                               "(assert (< (f 1 2) 3))"),
                  ParseError);
  // Macro argument that a quantifier in the body would capture.
  CHECK_THROWS_AS(parse_script("(declare-const k Int)\n"
                               "(define-fun allpos ((a Int)) Bool (forall ((k Int)) (< a k)))\n"
                               "(assert (allpos (+ k 1)))"),
                  ParseError);
  // Binder shadowing the parameter is fine: the parameter is simply unused there.
  CHECK_NOTHROW(parse_script("(declare-const k Int)\n"
                             "(define-fun f ((a Int)) Bool (forall ((a Int)) (< a 1)))\n"
                             "(assert (f k))"));
}

TEST_CASE("script-level errors") {
  CHECK_THROWS_AS(parse_script("(declare-sort L 1)"), ParseError);
  CHECK_THROWS_AS(parse_script("(declare-sort Int 0)"), ParseError);
  CHECK_THROWS_AS(parse_script("(declare-sort G 0)(declare-sort G 0)"), ParseError);
  CHECK_THROWS_AS(parse_script("(declare-const a Int)(declare-const a Bool)"), ParseError);
  CHECK_THROWS_AS(parse_script("(declare-const a Int)(assert a)"), ParseError);  // not Bool
  CHECK_THROWS_AS(parse_script("(pop 1)"), ParseError);
  CHECK_THROWS_AS(parse_script("(check-sat now)"), ParseError);
  CHECK_THROWS_AS(parse_script("(declare-const n Nat)"), ParseError);  // Nat never in scripts
  CHECK_THROWS_AS(parse_script("(assert (iff true true))"), ParseError);
  CHECK_THROWS_AS(parse_script("atom"), ParseError);
}

TEST_CASE("printed scripts parse back to the same value") {
  Script s = parse_script(
      "(set-logic QF_LIRA)\n"
      "(declare-sort G 0)\n"
      "(declare-const |weird name| G)\n"
      "(declare-const x Int)\n"
      "(declare-const u Real)\n"
      "(declare-fun f (G) Int)\n"
      "(assert (< (+ (f |weird name|) x 3) (- x 2)))\n"
      "(assert (<= (to_real x) (/ u 2.0)))\n"
      "(assert (forall ((k Int)) (=> (< k x) (< k (+ x 1)))))\n"
      "(assert (= u (- 0.5)))\n"
      "(check-sat)\n");
  std::string text = print_script(s);
  Script back = parse_script(text);
  CHECK(back == s);
  CHECK(print_script(back) == text);  // printing is a fixpoint
}

TEST_CASE("random scripts round-trip through print and parse") {
  gen::Rng rng(7151623u);
  for (int iter = 0; iter < 500; ++iter) {
    Script s = gen::random_script(rng);
    std::string text = print_script(s);
    CAPTURE(text);
    Script back = parse_script(text);
    CHECK(back == s);
  }
}
