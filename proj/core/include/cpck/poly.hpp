#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "cpck/rational.hpp"

namespace cpck {

// Reflected arithmetic expressions over two variable spaces: integer-valued
// variables and real-valued variables, each indexed densely from 0.  Mixed
// expressions go through Cast (integer expression used at real type).  Every
// node carries its type; the factories reject ill-typed combinations.
enum class ArithType { Int, Real };

class ArithExpr;
using ArithPtr = std::shared_ptr<const ArithExpr>;

class ArithExpr {
public:
  enum class Kind { IntVar, RealVar, Const, Add, Sub, Mul, Neg, DivConst, Cast };

  Kind kind;
  ArithType type;
  std::uint32_t index = 0;  // IntVar / RealVar
  Rat value;                // Const; DivConst divisor
  ArithPtr a, b;
};

ArithPtr aint_var(std::uint32_t index);
ArithPtr areal_var(std::uint32_t index);
// Const of the given type; an Int constant must have an integral value.
ArithPtr aconst(const Rat& value, ArithType type);
ArithPtr aadd(ArithPtr x, ArithPtr y);
ArithPtr asub(ArithPtr x, ArithPtr y);
ArithPtr amul(ArithPtr x, ArithPtr y);
ArithPtr aneg(ArithPtr x);
// Division by a nonzero rational constant; real-typed only.
ArithPtr adiv_const(ArithPtr x, const Rat& divisor);
ArithPtr acast(ArithPtr x);  // Int expression viewed as Real

// A monomial is a rational coefficient times a multiset of variables.  The
// variable list is sorted ascending and uses a single global index space:
// integer variable i maps to 2*i, real variable j to 2*j+1.
struct Monomial {
  Rat coeff;
  std::vector<std::uint32_t> vars;

  bool operator==(const Monomial& o) const { return coeff == o.coeff && vars == o.vars; }
};

// Canonical polynomial: monomials with nonzero coefficients, duplicate-free
// variable parts, sorted by the monomial order below.
struct Polynomial {
  std::vector<Monomial> monos;

  bool operator==(const Polynomial& o) const { return monos == o.monos; }
  bool is_zero() const { return monos.empty(); }
};

// Order on variable parts: shorter first; equal length compares
// lexicographically.  The constant monomial (empty part) comes first.
int mono_order(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);

bool is_canonical(const Polynomial& p);

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_neg(const Polynomial& p);
Polynomial poly_scale(const Polynomial& p, const Rat& k);

// Normal form of a reflected expression.
Polynomial to_poly(const ArithPtr& e);

// Values for the two variable spaces; integer variable i reads ints[i], real
// variable j reads reals[j].  Lookups past the end throw MissingVariable.
struct EvalContext {
  std::vector<BigInt> ints;
  std::vector<Rat> reals;
};

Rat denote(const ArithPtr& e, const EvalContext& ctx);
Rat denote(const Polynomial& p, const EvalContext& ctx);
Rat denote(const Monomial& m, const EvalContext& ctx);

// Decides e1 == e2 as polynomials.  When they differ, `difference` is the
// nonzero normal form of e1 - e2 (a witness a random evaluation can probe).
struct PolyEqCertificate {
  bool equal;
  Polynomial difference;
};
PolyEqCertificate certify_poly_eq(const ArithPtr& e1, const ArithPtr& e2);

std::string to_string(const Polynomial& p);

}  // namespace cpck
