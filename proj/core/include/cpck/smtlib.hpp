#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cpck/term.hpp"

namespace cpck {

// --- s-expressions -----------------------------------------------------------

// Token-level atoms keep their flavor so later stages can tell a numeral from
// a symbol without re-lexing.  Quoted symbols are stored without the bars.
struct SExpr {
  enum class Type { Symbol, Numeral, Decimal, Keyword, List };

  Type type = Type::List;
  std::string text;
  std::vector<SExpr> items;
  int line = 0;
  int col = 0;

  bool is_symbol(std::string_view s) const { return type == Type::Symbol && text == s; }
  bool is_list() const { return type == Type::List; }
};

// Reads a whole input into a sequence of top-level s-expressions.  Comments
// run from ';' to end of line.  Throws ParseError on stray ')' / unterminated
// '(' / bad tokens.
std::vector<SExpr> read_sexprs(std::string_view input);

// --- signatures ----------------------------------------------------------------

struct Macro {
  std::vector<Binding> params;
  TermPtr body;
};

// Symbol environment for term parsing.  `consts` maps a name to its unique
// Var node so every occurrence in a parsed file shares one term.  The two
// flags widen the term language for goal files; SMT-LIB scripts and proofs
// keep both off.
struct Signature {
  std::set<std::string> sorts;
  std::map<std::string, TermPtr> consts;
  std::map<std::string, FunSigPtr> funs;
  std::map<std::string, Macro> macros;
  bool allow_iff = false;
  bool allow_nat = false;

  bool knows(const std::string& name) const {
    return consts.count(name) || funs.count(name) || macros.count(name);
  }
};

Sort parse_sort(const SExpr& e, const Signature& sig);

// Parses a term; let- and define-fun applications are expanded on the spot,
// so the result contains neither.  Throws ParseError / SortError.
TermPtr parse_term(const SExpr& e, const Signature& sig);

// --- scripts --------------------------------------------------------------------

struct ConstDecl {
  std::string name;
  Sort sort;
  bool operator==(const ConstDecl& o) const { return name == o.name && sort == o.sort; }
};

// Parsed SMT-LIB script.  Declarations keep their order; define-funs are gone
// (expanded into the assertions that used them).
struct Script {
  std::string logic;
  std::vector<std::string> sorts;
  std::vector<ConstDecl> consts;
  std::vector<FunSigPtr> funs;
  std::vector<TermPtr> assertions;
  bool check_sat = false;

  bool operator==(const Script& o) const;

  // Signature over the script's declarations (for parsing related inputs,
  // e.g. proof files that reference the same symbols).
  Signature signature() const;
};

Script parse_script(std::string_view input);

// Renders a script that parses back to an equal Script value: declarations
// first (sorts, consts, funs), then assertions, then check-sat.
std::string print_script(const Script& s);

std::string render_sort(const Sort& s);

}  // namespace cpck
