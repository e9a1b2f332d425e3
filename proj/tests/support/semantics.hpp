#pragma once

// Independent evaluation oracles for the test suite: exact-rational and
// boolean interpretation of quantifier-free terms, plus truth-table helpers.
// Deliberately written against the term structure only, without reusing the
// library's checkers, so tests cross-validate rather than echo.

#include <map>
#include <stdexcept>
#include <string>

#include "cpck/rational.hpp"
#include "cpck/term.hpp"

namespace cpck::testsem {

struct Assignment {
  std::map<std::string, bool> bools;
  std::map<std::string, Rat> nums;
};

inline Rat eval_num(const TermPtr& t, const Assignment& a);

inline bool eval_bool(const TermPtr& t, const Assignment& a) {
  switch (t->kind()) {
    case Term::Kind::BoolLit: return t->bool_value();
    case Term::Kind::Var: {
      auto it = a.bools.find(t->name());
      if (it == a.bools.end()) throw std::runtime_error("unbound bool var " + t->name());
      return it->second;
    }
    case Term::Kind::App: break;
    default: throw std::runtime_error("eval_bool: unsupported term " + to_sexpr(t));
  }
  const auto& c = t->children();
  switch (t->op()) {
    case Op::Not: return !eval_bool(c[0], a);
    case Op::And: return eval_bool(c[0], a) && eval_bool(c[1], a);
    case Op::Or: return eval_bool(c[0], a) || eval_bool(c[1], a);
    case Op::Implies: return !eval_bool(c[0], a) || eval_bool(c[1], a);
    case Op::Iff: return eval_bool(c[0], a) == eval_bool(c[1], a);
    case Op::Eq:
    case Op::Distinct: {
      bool same;
      if (well_sorted(c[0]).is_bool()) {
        same = eval_bool(c[0], a) == eval_bool(c[1], a);
      } else {
        same = eval_num(c[0], a) == eval_num(c[1], a);
      }
      return t->op() == Op::Eq ? same : !same;
    }
    case Op::Lt: return eval_num(c[0], a) < eval_num(c[1], a);
    case Op::Le: return eval_num(c[0], a) <= eval_num(c[1], a);
    default: throw std::runtime_error("eval_bool: non-boolean operator");
  }
}

inline Rat eval_num(const TermPtr& t, const Assignment& a) {
  switch (t->kind()) {
    case Term::Kind::IntLit: return Rat(t->int_value());
    case Term::Kind::RatLit: return t->rat_value();
    case Term::Kind::ToReal: return eval_num(t->children()[0], a);
    case Term::Kind::Var: {
      auto it = a.nums.find(t->name());
      if (it == a.nums.end()) throw std::runtime_error("unbound numeric var " + t->name());
      return it->second;
    }
    case Term::Kind::App: break;
    default: throw std::runtime_error("eval_num: unsupported term " + to_sexpr(t));
  }
  const auto& c = t->children();
  switch (t->op()) {
    case Op::Add: return eval_num(c[0], a) + eval_num(c[1], a);
    case Op::Sub: return eval_num(c[0], a) - eval_num(c[1], a);
    case Op::Mul: return eval_num(c[0], a) * eval_num(c[1], a);
    case Op::Div: return eval_num(c[0], a) / eval_num(c[1], a);
    case Op::Neg: return -eval_num(c[0], a);
    default: throw std::runtime_error("eval_num: non-numeric operator");
  }
}

}  // namespace cpck::testsem
