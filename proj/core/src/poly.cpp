#include "cpck/poly.hpp"

#include <algorithm>

#include "cpck/errors.hpp"

namespace cpck {

namespace {

std::shared_ptr<ArithExpr> node(ArithExpr::Kind kind, ArithType type, ArithPtr a = nullptr,
                                ArithPtr b = nullptr) {
  auto e = std::make_shared<ArithExpr>();
  e->kind = kind;
  e->type = type;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

ArithType join(const ArithPtr& x, const ArithPtr& y, const char* what) {
  if (x->type != y->type) {
    throw Error(std::string(what) + ": operand types differ (insert an explicit cast)");
  }
  return x->type;
}

}  // namespace

ArithPtr aint_var(std::uint32_t index) {
  auto e = node(ArithExpr::Kind::IntVar, ArithType::Int);
  e->index = index;
  return e;
}

ArithPtr areal_var(std::uint32_t index) {
  auto e = node(ArithExpr::Kind::RealVar, ArithType::Real);
  e->index = index;
  return e;
}

ArithPtr aconst(const Rat& value, ArithType type) {
  if (type == ArithType::Int && !value.is_integer()) {
    throw Error("aconst: integer constant must have an integral value, got " + value.to_string());
  }
  auto e = node(ArithExpr::Kind::Const, type);
  e->value = value;
  return e;
}

ArithPtr aadd(ArithPtr x, ArithPtr y) {
  ArithType t = join(x, y, "aadd");
  return node(ArithExpr::Kind::Add, t, std::move(x), std::move(y));
}

ArithPtr asub(ArithPtr x, ArithPtr y) {
  ArithType t = join(x, y, "asub");
  return node(ArithExpr::Kind::Sub, t, std::move(x), std::move(y));
}

ArithPtr amul(ArithPtr x, ArithPtr y) {
  ArithType t = join(x, y, "amul");
  return node(ArithExpr::Kind::Mul, t, std::move(x), std::move(y));
}

ArithPtr aneg(ArithPtr x) {
  ArithType t = x->type;
  return node(ArithExpr::Kind::Neg, t, std::move(x));
}

ArithPtr adiv_const(ArithPtr x, const Rat& divisor) {
  if (x->type != ArithType::Real) throw Error("adiv_const: dividend must be real-typed");
  if (divisor.is_zero()) throw DivisionByZero();
  auto e = node(ArithExpr::Kind::DivConst, ArithType::Real, std::move(x));
  e->value = divisor;
  return e;
}

ArithPtr acast(ArithPtr x) {
  if (x->type != ArithType::Int) throw Error("acast: argument must be integer-typed");
  return node(ArithExpr::Kind::Cast, ArithType::Real, std::move(x));
}

// --- polynomials -----------------------------------------------------------------

int mono_order(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  if (a < b) return -1;
  if (b < a) return 1;
  return 0;
}

bool is_canonical(const Polynomial& p) {
  for (std::size_t i = 0; i < p.monos.size(); ++i) {
    if (p.monos[i].coeff.is_zero()) return false;
    if (!std::is_sorted(p.monos[i].vars.begin(), p.monos[i].vars.end())) return false;
    if (i > 0 && mono_order(p.monos[i - 1].vars, p.monos[i].vars) >= 0) return false;
  }
  return true;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  out.monos.reserve(p.monos.size() + q.monos.size());
  std::size_t i = 0, j = 0;
  while (i < p.monos.size() && j < q.monos.size()) {
    int c = mono_order(p.monos[i].vars, q.monos[j].vars);
    if (c < 0) {
      out.monos.push_back(p.monos[i++]);
    } else if (c > 0) {
      out.monos.push_back(q.monos[j++]);
    } else {
      Rat coeff = p.monos[i].coeff + q.monos[j].coeff;
      if (!coeff.is_zero()) out.monos.push_back({coeff, p.monos[i].vars});
      ++i;
      ++j;
    }
  }
  while (i < p.monos.size()) out.monos.push_back(p.monos[i++]);
  while (j < q.monos.size()) out.monos.push_back(q.monos[j++]);
  return out;
}

Polynomial poly_neg(const Polynomial& p) {
  Polynomial out = p;
  for (auto& m : out.monos) m.coeff = -m.coeff;
  return out;
}

Polynomial poly_scale(const Polynomial& p, const Rat& k) {
  if (k.is_zero()) return {};
  Polynomial out = p;
  for (auto& m : out.monos) m.coeff = m.coeff * k;
  return out;
}

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
  std::vector<Monomial> products;
  products.reserve(p.monos.size() * q.monos.size());
  for (const auto& mp : p.monos) {
    for (const auto& mq : q.monos) {
      Monomial m;
      m.coeff = mp.coeff * mq.coeff;
      m.vars.resize(mp.vars.size() + mq.vars.size());
      std::merge(mp.vars.begin(), mp.vars.end(), mq.vars.begin(), mq.vars.end(), m.vars.begin());
      products.push_back(std::move(m));
    }
  }
  std::sort(products.begin(), products.end(),
            [](const Monomial& a, const Monomial& b) { return mono_order(a.vars, b.vars) < 0; });
  Polynomial out;
  for (auto& m : products) {
    if (!out.monos.empty() && mono_order(out.monos.back().vars, m.vars) == 0) {
      out.monos.back().coeff += m.coeff;
      if (out.monos.back().coeff.is_zero()) out.monos.pop_back();
    } else if (!m.coeff.is_zero()) {
      out.monos.push_back(std::move(m));
    }
  }
  return out;
}

namespace {

std::uint32_t global_index(const ArithExpr& e) {
  return e.kind == ArithExpr::Kind::IntVar ? 2 * e.index : 2 * e.index + 1;
}

}  // namespace

Polynomial to_poly(const ArithPtr& e) {
  switch (e->kind) {
    case ArithExpr::Kind::IntVar:
    case ArithExpr::Kind::RealVar: {
      Polynomial p;
      p.monos.push_back({Rat(1), {global_index(*e)}});
      return p;
    }
    case ArithExpr::Kind::Const: {
      Polynomial p;
      if (!e->value.is_zero()) p.monos.push_back({e->value, {}});
      return p;
    }
    case ArithExpr::Kind::Add: return poly_add(to_poly(e->a), to_poly(e->b));
    case ArithExpr::Kind::Sub: return poly_add(to_poly(e->a), poly_neg(to_poly(e->b)));
    case ArithExpr::Kind::Mul: return poly_mul(to_poly(e->a), to_poly(e->b));
    case ArithExpr::Kind::Neg: return poly_neg(to_poly(e->a));
    case ArithExpr::Kind::DivConst: return poly_scale(to_poly(e->a), Rat(1) / e->value);
    case ArithExpr::Kind::Cast: return to_poly(e->a);
  }
  return {};
}

Rat denote(const ArithPtr& e, const EvalContext& ctx) {
  switch (e->kind) {
    case ArithExpr::Kind::IntVar:
      if (e->index >= ctx.ints.size()) throw MissingVariable(e->index, "integer");
      return Rat(ctx.ints[e->index]);
    case ArithExpr::Kind::RealVar:
      if (e->index >= ctx.reals.size()) throw MissingVariable(e->index, "real");
      return ctx.reals[e->index];
    case ArithExpr::Kind::Const: return e->value;
    case ArithExpr::Kind::Add: return denote(e->a, ctx) + denote(e->b, ctx);
    case ArithExpr::Kind::Sub: return denote(e->a, ctx) - denote(e->b, ctx);
    case ArithExpr::Kind::Mul: return denote(e->a, ctx) * denote(e->b, ctx);
    case ArithExpr::Kind::Neg: return -denote(e->a, ctx);
    case ArithExpr::Kind::DivConst: return denote(e->a, ctx) / e->value;
    case ArithExpr::Kind::Cast: return denote(e->a, ctx);
  }
  return Rat(0);
}

Rat denote(const Monomial& m, const EvalContext& ctx) {
  Rat acc = m.coeff;
  for (std::uint32_t g : m.vars) {
    if (g % 2 == 0) {
      std::uint32_t i = g / 2;
      if (i >= ctx.ints.size()) throw MissingVariable(i, "integer");
      acc *= Rat(ctx.ints[i]);
    } else {
      std::uint32_t j = g / 2;
      if (j >= ctx.reals.size()) throw MissingVariable(j, "real");
      acc *= ctx.reals[j];
    }
  }
  return acc;
}

Rat denote(const Polynomial& p, const EvalContext& ctx) {
  Rat acc(0);
  for (const auto& m : p.monos) acc += denote(m, ctx);
  return acc;
}

PolyEqCertificate certify_poly_eq(const ArithPtr& e1, const ArithPtr& e2) {
  Polynomial diff = poly_add(to_poly(e1), poly_neg(to_poly(e2)));
  return {diff.is_zero(), std::move(diff)};
}

std::string to_string(const Polynomial& p) {
  if (p.monos.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < p.monos.size(); ++i) {
    const Monomial& m = p.monos[i];
    if (i) out += " + ";
    out += m.coeff.to_string();
    for (std::uint32_t g : m.vars) {
      out += g % 2 == 0 ? "*i" : "*r";
      out += std::to_string(g / 2);
    }
  }
  return out;
}

}  // namespace cpck
