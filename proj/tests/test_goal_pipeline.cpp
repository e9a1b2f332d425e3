// Goal pipeline: the goal grammar, the normalizing preprocessor and the
// refutation-script translator, cross-checked with an independent evaluator.

#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cpck/errors.hpp"
#include "cpck/goal.hpp"
#include "cpck/smtlib.hpp"
#include "cpck/term.hpp"
#include "support/generators.hpp"
#include "support/semantics.hpp"

using namespace cpck;
namespace gen = cpck::testgen;
namespace sem = cpck::testsem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool mentions_iff(const TermPtr& t) {
  return contains(t, [](const TermPtr& n) { return n->is_app(Op::Iff); });
}

bool mentions_nat(const TermPtr& t) {
  return contains(t, [](const TermPtr& n) {
    if (n->kind() == Term::Kind::Var) return n->var_sort().is_nat();
    if (n->kind() == Term::Kind::Forall) {
      for (const Binding& b : n->binders()) {
        if (b.sort.is_nat()) return true;
      }
    }
    return false;
  });
}

bool goals_equal(const Goal& a, const Goal& b) {
  if (a.sorts.size() != b.sorts.size() || a.consts.size() != b.consts.size() ||
      a.funs.size() != b.funs.size() || a.hypotheses.size() != b.hypotheses.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.sorts.size(); ++i) {
    if (a.sorts[i].name != b.sorts[i].name) return false;
    if (a.sorts[i].nonempty != b.sorts[i].nonempty) return false;
  }
  for (std::size_t i = 0; i < a.consts.size(); ++i) {
    if (a.consts[i].name != b.consts[i].name || !(a.consts[i].sort == b.consts[i].sort)) {
      return false;
    }
  }
  for (std::size_t i = 0; i < a.funs.size(); ++i) {
    if (a.funs[i]->name != b.funs[i]->name) return false;
  }
  for (std::size_t i = 0; i < a.hypotheses.size(); ++i) {
    if (a.hypotheses[i].name != b.hypotheses[i].name) return false;
    if (!equal(a.hypotheses[i].formula, b.hypotheses[i].formula)) return false;
  }
  return equal(a.conclusion, b.conclusion);
}

}  // namespace

TEST_CASE("a full goal parses into the expected structure") {
  Goal g = parse_goal(R"(
    (sort S)
    (sort T :nonempty)
    (const c S)
    (const n Nat)
    (const p Bool)
    (fun f (S Int) S)
    (hyp base (= (f c 0) c))
    (hyp positive (<= 0 n))
    (goal (=> p (= (f c n) c)))
  )");

  REQUIRE(g.sorts.size() == 2);
  CHECK(g.sorts[0].name == "S");
  CHECK_FALSE(g.sorts[0].nonempty);
  CHECK(g.sorts[1].name == "T");
  CHECK(g.sorts[1].nonempty);

  REQUIRE(g.consts.size() == 3);
  CHECK(g.consts[0].name == "c");
  CHECK(g.consts[0].sort == Sort::uninterpreted("S"));
  CHECK(g.consts[1].sort == Sort::natural());
  CHECK(g.consts[2].sort == Sort::boolean());

  REQUIRE(g.funs.size() == 1);
  CHECK(g.funs[0]->name == "f");
  REQUIRE(g.funs[0]->args.size() == 2);
  CHECK(g.funs[0]->args[1] == Sort::integer());
  CHECK(g.funs[0]->result == Sort::uninterpreted("S"));

  REQUIRE(g.hypotheses.size() == 2);
  CHECK(g.hypotheses[0].name == "base");
  CHECK(g.hypotheses[1].name == "positive");
  CHECK(g.conclusion->is_app(Op::Implies));

  Signature sig = g.signature();
  CHECK(sig.allow_iff);
  CHECK(sig.allow_nat);
  CHECK(sig.knows("c"));
  CHECK(sig.knows("f"));
  CHECK(sig.sorts.count("T") == 1);
}

TEST_CASE("goal formulas may use iff and Nat binders up front") {
  Goal g = parse_goal("(const n Nat) (goal (iff (<= 0 n) (forall ((m Nat)) (<= 0 m))))");
  CHECK(mentions_iff(g.conclusion));
  CHECK(mentions_nat(g.conclusion));
}

TEST_CASE("hypothesis names do not clash with term symbols") {
  // Hypothesis labels live in their own namespace.
  Goal g = parse_goal("(const p Bool) (hyp p p) (goal p)");
  CHECK(g.hypotheses[0].name == "p");
  CHECK(g.hypotheses[0].formula->name() == "p");
}

TEST_CASE("goal grammar rejections carry positions and clear messages") {
  auto message_of = [](const std::string& text) {
    try {
      parse_goal(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("<no error>");
  };

  CHECK(message_of("(hyp h true)") == "parse error at 1:1: input has no (goal ...) form");
  CHECK(message_of("(goal true) (goal false)").find("only one goal form is allowed") !=
        std::string::npos);
  CHECK(message_of("(axiom true) (goal true)").find("unknown form 'axiom'") != std::string::npos);
  CHECK(message_of("(sort) (goal true)").find("sort takes a name") != std::string::npos);
  CHECK(message_of("(sort S :finite) (goal true)").find("the only sort attribute is :nonempty") !=
        std::string::npos);
  CHECK(message_of("(sort S) (sort S) (goal true)").find("sort 'S' already declared") !=
        std::string::npos);
  CHECK(message_of("(const c Int) (const c Bool) (goal true)")
            .find("symbol 'c' already declared") != std::string::npos);
  CHECK(message_of("(const f Int) (fun f (Int) Int) (goal true)")
            .find("symbol 'f' already declared") != std::string::npos);
  CHECK(message_of("(fun f (Nat) Int) (goal true)")
            .find("Nat is not allowed in function signatures") != std::string::npos);
  CHECK(message_of("(fun f (Int) Nat) (goal true)")
            .find("Nat is not allowed in function signatures") != std::string::npos);
  CHECK(message_of("(fun f () Int) (goal true)").find("non-empty argument sort list") !=
        std::string::npos);
  CHECK(message_of("(hyp h true) (hyp h true) (goal true)")
            .find("hypothesis 'h' already declared") != std::string::npos);
  CHECK(message_of("(const c Unknown) (goal true)").find("unknown sort 'Unknown'") !=
        std::string::npos);
  CHECK(message_of("(goal (f 1))").find("unknown symbol 'f'") != std::string::npos);
  CHECK(message_of("atom (goal true)").find("expected (sort ...)") != std::string::npos);

  // The duplicate-symbol error points at the offending name, not the form.
  try {
    parse_goal("(const c Int)\n(const c Bool)\n(goal true)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(e.col == 8);
  }
}

TEST_CASE("hypotheses and the goal must be Bool") {
  CHECK_THROWS_AS(parse_goal("(hyp h 3) (goal true)"), SortError);
  CHECK_THROWS_AS(parse_goal("(goal (+ 1 2))"), SortError);
  try {
    parse_goal("(const i Int) (goal i)");
    FAIL("expected a sort error");
  } catch (const SortError& e) {
    CHECK(e.expected == "Bool");
    CHECK(e.actual == "Int");
  }
}

TEST_CASE("preprocess replaces iff by Bool equality and logs the rewrite") {
  Goal g = parse_goal("(const p Bool) (const q Bool) (hyp h (iff p q)) (goal (iff q p))");
  PreprocessResult r = preprocess(g);

  TermPtr p = mk_var("p", Sort::boolean());
  TermPtr q = mk_var("q", Sort::boolean());
  CHECK(equal(r.goal.hypotheses[0].formula, mk_eq(p, q)));
  CHECK(equal(r.goal.conclusion, mk_eq(q, p)));

  REQUIRE(r.rewrites.size() == 2);
  CHECK(equal(r.rewrites[0].before, g.hypotheses[0].formula));
  CHECK(equal(r.rewrites[0].after, r.goal.hypotheses[0].formula));
  CHECK(r.rewrites[0].reason == "iff replaced by Bool equality");
  CHECK(r.rewrites[1].reason == "iff replaced by Bool equality");
}

TEST_CASE("preprocess relaxes Nat constants to Int and appends a guard") {
  Goal g = parse_goal("(const n Nat) (hyp h (<= n 7)) (goal (<= 0 (+ n n)))");
  PreprocessResult r = preprocess(g);

  REQUIRE(r.goal.consts.size() == 1);
  CHECK(r.goal.consts[0].name == "n");
  CHECK(r.goal.consts[0].sort == Sort::integer());

  TermPtr n_int = mk_var("n", Sort::integer());
  REQUIRE(r.goal.hypotheses.size() == 2);
  CHECK(r.goal.hypotheses[0].name == "h");
  CHECK(equal(r.goal.hypotheses[0].formula, mk_le(n_int, mk_int(7))));
  CHECK(r.goal.hypotheses[1].name == "n_nonneg");
  CHECK(equal(r.goal.hypotheses[1].formula, mk_le(mk_int(0), n_int)));
  CHECK(equal(r.goal.conclusion, mk_le(mk_int(0), mk_add(n_int, n_int))));

  // Two formula rewrites plus the appended guard, which has no `before`.
  REQUIRE(r.rewrites.size() == 3);
  CHECK(r.rewrites[0].reason == "Nat relaxed to Int with nonnegativity guard");
  CHECK(r.rewrites[1].reason == "Nat relaxed to Int with nonnegativity guard");
  CHECK(r.rewrites[2].before == nullptr);
  CHECK(equal(r.rewrites[2].after, r.goal.hypotheses[1].formula));
  CHECK(r.rewrites[2].reason.find("'n'") != std::string::npos);
}

TEST_CASE("guard names step aside when a hypothesis already took the name") {
  Goal g = parse_goal(R"(
    (const x Nat)
    (hyp x_nonneg true)
    (hyp x_nonneg_ false)
    (goal (<= 0 x))
  )");
  PreprocessResult r = preprocess(g);
  REQUIRE(r.goal.hypotheses.size() == 3);
  CHECK(r.goal.hypotheses[2].name == "x_nonneg__");
  CHECK(equal(r.goal.hypotheses[2].formula, mk_le(mk_int(0), mk_var("x", Sort::integer()))));
}

TEST_CASE("guards for several Nat constants follow declaration order") {
  Goal g = parse_goal("(const a Nat) (const i Int) (const b Nat) (goal true)");
  PreprocessResult r = preprocess(g);
  REQUIRE(r.goal.hypotheses.size() == 2);
  CHECK(r.goal.hypotheses[0].name == "a_nonneg");
  CHECK(r.goal.hypotheses[1].name == "b_nonneg");
  CHECK(r.goal.consts[1].sort == Sort::integer());  // untouched Int const stays
  // A constant that no formula mentions is still guarded.
  CHECK(r.rewrites.size() == 2);
}

TEST_CASE("preprocess relaxes Nat binders into guarded implications") {
  Goal g = parse_goal("(goal (forall ((m Nat)) (<= 0 m)))");
  PreprocessResult r = preprocess(g);

  TermPtr m = mk_var("m", Sort::integer());
  TermPtr body = mk_le(mk_int(0), m);
  TermPtr expected = mk_forall({{"m", Sort::integer()}}, mk_implies(body, body));
  CHECK(equal(r.goal.conclusion, expected));
  REQUIRE(r.rewrites.size() == 1);
  CHECK(r.rewrites[0].reason == "Nat relaxed to Int with nonnegativity guard");
}

TEST_CASE("mixed binder lists guard only the Nat positions") {
  Goal g = parse_goal("(goal (forall ((a Nat) (x Int) (b Nat)) (<= a (+ x b))))");
  PreprocessResult r = preprocess(g);

  TermPtr a = mk_var("a", Sort::integer());
  TermPtr x = mk_var("x", Sort::integer());
  TermPtr b = mk_var("b", Sort::integer());
  TermPtr guard = mk_and(mk_le(mk_int(0), a), mk_le(mk_int(0), b));
  TermPtr expected = mk_forall({{"a", Sort::integer()}, {"x", Sort::integer()}, {"b", Sort::integer()}},
                               mk_implies(guard, mk_le(a, mk_add(x, b))));
  CHECK(equal(r.goal.conclusion, expected));
}

TEST_CASE("one formula can trigger both rewrite reasons at once") {
  Goal g = parse_goal("(const n Nat) (const p Bool) (goal (iff p (<= 0 n)))");
  PreprocessResult r = preprocess(g);
  REQUIRE(r.rewrites.size() == 2);  // formula + guard
  CHECK(r.rewrites[0].reason == "iff replaced by Bool equality; Nat relaxed to Int with nonnegativity guard");
}

TEST_CASE("subtraction, negation and division on Nat-valued operands are refused") {
  auto rejects = [](const std::string& text) {
    Goal g = parse_goal(text);
    CHECK_THROWS_AS(preprocess(g), UnsupportedConstruct);
  };
  rejects("(const n Nat) (goal (<= (- n 1) 0))");
  rejects("(const n Nat) (hyp h (< (- n) 1)) (goal true)");
  rejects("(const n Nat) (goal (forall ((m Nat)) (<= (- m n) 0)))");

  try {
    preprocess(parse_goal("(const n Nat) (goal (= (- n 1) 0))"));
    FAIL("expected a rejection");
  } catch (const UnsupportedConstruct& e) {
    CHECK(std::string(e.what()).find("subtraction, negation and division") != std::string::npos);
  }

  // +, * and comparisons are the Nat-safe operations...
  CHECK_NOTHROW(preprocess(parse_goal("(const n Nat) (goal (< (* n (+ n 1)) 100))")));
  // ...and once a Nat value is cast to Real it may be subtracted again.
  CHECK_NOTHROW(preprocess(parse_goal("(const n Nat) (goal (<= (- (to_real n) 1.0) 0.0))")));
  // Subtraction over plain Int was never restricted.
  CHECK_NOTHROW(preprocess(parse_goal("(const i Int) (goal (<= (- i 1) i))")));
}

TEST_CASE("preprocess leaves already-clean goals untouched") {
  Goal g = parse_goal("(sort S) (const c S) (fun f (S) S) (hyp h (= (f c) c)) (goal (= c c))");
  PreprocessResult r = preprocess(g);
  CHECK(r.rewrites.empty());
  CHECK(goals_equal(g, r.goal));
}

TEST_CASE("preprocess output is clean, well-sorted and a fixed point") {
  gen::Rng rng(0x60a1f00du);
  int rewrote = 0;
  for (int iter = 0; iter < 500; ++iter) {
    std::string text = gen::random_goal_text(rng);
    Goal g = parse_goal(text);

    PreprocessResult first;
    try {
      first = preprocess(g);
    } catch (const UnsupportedConstruct&) {
      continue;  // generator avoids Nat-tainted -, /; plain goals never land here
    }
    rewrote += first.rewrites.empty() ? 0 : 1;

    for (const Hypothesis& h : first.goal.hypotheses) {
      CHECK_FALSE(mentions_iff(h.formula));
      CHECK_FALSE(mentions_nat(h.formula));
      CHECK(well_sorted(h.formula).is_bool());
    }
    CHECK_FALSE(mentions_iff(first.goal.conclusion));
    CHECK_FALSE(mentions_nat(first.goal.conclusion));
    CHECK(well_sorted(first.goal.conclusion).is_bool());
    for (const ConstDecl& c : first.goal.consts) CHECK_FALSE(c.sort.is_nat());

    PreprocessResult second = preprocess(first.goal);
    CHECK(second.rewrites.empty());
    CHECK(goals_equal(first.goal, second.goal));
  }
  CHECK(rewrote > 150);  // the generator mixes in plenty of iff/Nat material
}

TEST_CASE("preprocessing preserves truth on quantifier-free goals") {
  gen::Rng rng(0x9e1dca5eu);
  int points = 0;
  for (int iter = 0; iter < 300; ++iter) {
    std::string text = gen::random_goal_text(rng, /*allow_quantifiers=*/false);
    Goal g = parse_goal(text);
    PreprocessResult r = preprocess(g);

    for (int trial = 0; trial < 20; ++trial) {
      sem::Assignment a;
      for (const ConstDecl& c : g.consts) {
        if (c.sort.is_bool()) {
          a.bools[c.name] = gen::coin(rng);
        } else if (c.sort.is_nat()) {
          a.nums[c.name] = Rat(BigInt(gen::pick(rng, 0, 5)));  // must respect Nat
        } else {
          a.nums[c.name] = Rat(BigInt(gen::pick(rng, -5, 5)));
        }
      }

      for (std::size_t i = 0; i < g.hypotheses.size(); ++i) {
        CHECK(sem::eval_bool(g.hypotheses[i].formula, a) ==
              sem::eval_bool(r.goal.hypotheses[i].formula, a));
      }
      CHECK(sem::eval_bool(g.conclusion, a) == sem::eval_bool(r.goal.conclusion, a));
      // Appended guards hold at every Nat-respecting point.
      for (std::size_t i = g.hypotheses.size(); i < r.goal.hypotheses.size(); ++i) {
        CHECK(sem::eval_bool(r.goal.hypotheses[i].formula, a));
      }
      ++points;
    }
  }
  CHECK(points == 300 * 20);
}

TEST_CASE("translate lays out declarations, hypotheses and the negated conclusion") {
  Goal g = parse_goal(R"(
    (sort S)
    (const c S)
    (const d S)
    (const p Bool)
    (fun f (S) S)
    (hyp fixed (= (f c) c))
    (hyp swap (=> p (= c d)))
    (goal p)
  )");
  TranslateResult t = translate(g);
  const Script& s = t.script;

  REQUIRE(s.sorts.size() == 1);
  CHECK(s.sorts[0] == "S");
  REQUIRE(s.consts.size() == 3);
  CHECK(s.consts[0].name == "c");
  CHECK(s.consts[2].name == "p");
  REQUIRE(s.funs.size() == 1);
  CHECK(s.funs[0]->name == "f");

  REQUIRE(s.assertions.size() == 3);
  CHECK(equal(s.assertions[0], g.hypotheses[0].formula));
  CHECK(equal(s.assertions[1], g.hypotheses[1].formula));
  CHECK(equal(s.assertions[2], mk_not(mk_var("p", Sort::boolean()))));
  CHECK(s.check_sat);

  REQUIRE(t.obligations.size() == 1);
  CHECK(t.obligations[0].sort == "S");
  CHECK(t.obligations[0].status == WitnessStatus::WitnessConst);
  CHECK(t.obligations[0].witness == "c");  // the first constant of the sort
}

TEST_CASE("a Bool equality conclusion is negated as distinct") {
  Goal g = parse_goal("(const p Bool) (const q Bool) (goal (= p q))");
  TranslateResult t = translate(g);
  TermPtr last = t.script.assertions.back();
  CHECK(equal(last, mk_distinct(mk_var("p", Sort::boolean()), mk_var("q", Sort::boolean()))));

  // A non-Bool equality is negated with plain not.
  Goal h = parse_goal("(const i Int) (goal (= i 0))");
  TermPtr neg = translate(h).script.assertions.back();
  CHECK(equal(neg, mk_not(mk_eq(mk_var("i", Sort::integer()), mk_int(0)))));

  // An iff that survived preprocessing lands on the same distinct shape.
  PreprocessResult r = preprocess(parse_goal("(const p Bool) (const q Bool) (goal (iff p q))"));
  TermPtr via_iff = translate(r.goal).script.assertions.back();
  CHECK(equal(via_iff, last));
}

TEST_CASE("sort inhabitation obligations cover every declared sort in order") {
  Goal g = parse_goal(R"(
    (sort A)
    (sort B :nonempty)
    (sort C)
    (const a A)
    (const a2 A)
    (fun h (B) A)
    (goal (forall ((x B)) (= (h x) a)))
  )");
  TranslateResult t = translate(g);
  REQUIRE(t.obligations.size() == 3);

  CHECK(t.obligations[0].sort == "A");
  CHECK(t.obligations[0].status == WitnessStatus::WitnessConst);
  CHECK(t.obligations[0].witness == "a");

  CHECK(t.obligations[1].sort == "B");
  CHECK(t.obligations[1].status == WitnessStatus::DeclaredNonempty);
  CHECK(t.obligations[1].witness.empty());

  CHECK(t.obligations[2].sort == "C");
  CHECK(t.obligations[2].status == WitnessStatus::NotQuantified);
}

TEST_CASE("a quantified sort with no witness is flagged as an empty-sort risk") {
  Goal g = parse_goal("(sort S) (fun f (S) Bool) (hyp h (forall ((x S)) (f x))) (goal true)");
  CHECK_THROWS_AS(translate(g), EmptySortRisk);
  try {
    translate(g);
  } catch (const EmptySortRisk& e) {
    CHECK(e.sort == "S");
    CHECK(std::string(e.what()).find("no witness and no nonempty marker") != std::string::npos);
  }

  // Quantification hiding inside the negated conclusion counts too.
  Goal c = parse_goal("(sort S) (fun f (S) Bool) (goal (forall ((x S)) (f x)))");
  CHECK_THROWS_AS(translate(c), EmptySortRisk);

  // The same goal with a :nonempty marker or a witness constant goes through.
  CHECK_NOTHROW(translate(parse_goal(
      "(sort S :nonempty) (fun f (S) Bool) (hyp h (forall ((x S)) (f x))) (goal true)")));
  CHECK_NOTHROW(translate(parse_goal(
      "(sort S) (const w S) (fun f (S) Bool) (hyp h (forall ((x S)) (f x))) (goal true)")));
}

TEST_CASE("translate insists on a preprocessed goal") {
  auto rejects = [](const std::string& text, const std::string& needle) {
    Goal g = parse_goal(text);
    try {
      translate(g);
      FAIL_CHECK("expected rejection of " << text);
    } catch (const UnsupportedConstruct& e) {
      CHECK(std::string(e.what()).find("requires a preprocessed goal") != std::string::npos);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  rejects("(const n Nat) (goal (<= 0 n))", "constant 'n' has sort Nat");
  rejects("(const p Bool) (goal (iff p p))", "iff remains in");
  rejects("(const p Bool) (hyp h (iff p p)) (goal p)", "iff remains in");
  rejects("(goal (forall ((m Nat)) (<= 0 m)))", "Nat remains in");

  // After preprocessing, the same goals translate cleanly.
  for (const char* text : {"(const n Nat) (goal (<= 0 n))",
                           "(const p Bool) (goal (iff p p))",
                           "(goal (forall ((m Nat)) (<= 0 m)))"}) {
    PreprocessResult r = preprocess(parse_goal(text));
    CHECK_NOTHROW(translate(r.goal));
  }
}

TEST_CASE("the translated script is valid printable and reparsable input") {
  Goal g = parse_goal(R"(
    (sort S)
    (const c S)
    (const n Nat)
    (fun f (S) S)
    (hyp h (= (f c) c))
    (goal (forall ((m Nat)) (iff (= (f c) c) (<= 0 (+ m n)))))
  )");
  PreprocessResult r = preprocess(g);
  TranslateResult t = translate(r.goal);

  std::string printed = print_script(t.script);
  Script back = parse_script(printed);
  CHECK(print_script(back) == printed);
  CHECK(back.check_sat);
  CHECK(back.assertions.size() == t.script.assertions.size());
  for (std::size_t i = 0; i < back.assertions.size(); ++i) {
    CHECK(equal(back.assertions[i], t.script.assertions[i]));
  }
}

TEST_CASE("the group-identity goal translates to the golden script byte for byte") {
  std::string dir = CPCK_FIXTURE_DIR;
  Goal g = parse_goal(slurp(dir + "/goals/group_identity.goal"));
  PreprocessResult r = preprocess(g);

  // The only rewrite is the iff in the conclusion.
  REQUIRE(r.rewrites.size() == 1);
  CHECK(r.rewrites[0].reason == "iff replaced by Bool equality");

  TranslateResult t = translate(r.goal);
  REQUIRE(t.obligations.size() == 1);
  CHECK(t.obligations[0].status == WitnessStatus::WitnessConst);
  CHECK(t.obligations[0].witness == "e");

  CHECK(print_script(t.script) == slurp(dir + "/golden/group_identity.smt2"));
}
