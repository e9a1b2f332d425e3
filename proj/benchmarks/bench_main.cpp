#include <benchmark/benchmark.h>

#include <sstream>
#include <string>

#include "cpck/checker.hpp"
#include "cpck/poly.hpp"
#include "cpck/proof.hpp"
#include "cpck/rules.hpp"
#include "cpck/smtlib.hpp"

namespace {

std::string make_script(int consts) {
  std::ostringstream out;
  out << "(set-logic QF_LIA)\n";
  for (int k = 0; k < consts; ++k) out << "(declare-const x" << k << " Int)\n";
  for (int k = 0; k + 1 < consts; ++k) {
    out << "(assert (< x" << k << " x" << k + 1 << "))\n";
  }
  out << "(check-sat)\n";
  return out.str();
}

void BM_ParseScript(benchmark::State& state) {
  std::string text = make_script(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    cpck::Script s = cpck::parse_script(text);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_ParseScript)->Arg(64)->Arg(512);

// A unit-propagation chain: p0, (or (not p_k) p_{k+1}) resolved down to the
// final atom, then against (not p_n) to the empty clause.
std::pair<std::string, std::string> make_chain(int n) {
  std::ostringstream problem, proof;
  for (int k = 0; k <= n; ++k) problem << "(declare-const p" << k << " Bool)\n";
  problem << "(assert p0)\n";
  for (int k = 0; k < n; ++k) {
    problem << "(assert (or (not p" << k << ") p" << k + 1 << "))\n";
  }
  problem << "(assert (not p" << n << "))\n(check-sat)\n";

  proof << "(assume a0 p0)\n";
  for (int k = 0; k < n; ++k) {
    proof << "(assume c" << k << " (or (not p" << k << ") p" << k + 1 << "))\n";
  }
  proof << "(assume an (not p" << n << "))\n";
  std::string prev = "a0";
  for (int k = 0; k < n; ++k) {
    proof << "(step t" << k << " p" << k + 1 << " :rule resolution :premises (" << prev << " c"
          << k << ") :args (true p" << k << "))\n";
    prev = "t" + std::to_string(k);
  }
  proof << "(step tf false :rule resolution :premises (" << prev << " an) :args (true p" << n
        << "))\n";
  return {problem.str(), proof.str()};
}

void BM_CheckResolutionChain(benchmark::State& state) {
  auto [problem_text, proof_text] = make_chain(static_cast<int>(state.range(0)));
  cpck::Script problem = cpck::parse_script(problem_text);
  cpck::ProofDag proof = cpck::parse_proof(proof_text, problem);
  for (auto _ : state) {
    cpck::CheckReport rep = cpck::check_proof(proof);
    benchmark::DoNotOptimize(rep);
  }
  state.SetItemsProcessed(state.iterations() * (state.range(0) + 1));
}
BENCHMARK(BM_CheckResolutionChain)->Arg(1000)->Arg(10000);

void BM_PolyNormalize(benchmark::State& state) {
  // (x + y)^2 - (x^2 + 2xy + y^2) as an ArithExpr difference
  cpck::ArithPtr x = cpck::areal_var(0);
  cpck::ArithPtr y = cpck::areal_var(1);
  cpck::ArithPtr lhs = cpck::amul(cpck::aadd(x, y), cpck::aadd(x, y));
  cpck::ArithPtr two = cpck::aconst(cpck::Rat(2), cpck::ArithType::Real);
  cpck::ArithPtr rhs = cpck::aadd(cpck::aadd(cpck::amul(x, x), cpck::amul(two, cpck::amul(x, y))),
                                  cpck::amul(y, y));
  for (auto _ : state) {
    cpck::PolyEqCertificate cert = cpck::certify_poly_eq(lhs, rhs);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_PolyNormalize);

void BM_AcCanon(benchmark::State& state) {
  cpck::Signature sig;
  std::vector<cpck::TermPtr> vars;
  for (int k = 0; k < 32; ++k) {
    vars.push_back(cpck::mk_var("v" + std::to_string(k), cpck::Sort::integer()));
  }
  cpck::TermPtr sum = vars[0];
  for (std::size_t k = 1; k < vars.size(); ++k) sum = cpck::mk_add(sum, vars[k]);
  for (auto _ : state) {
    cpck::TermPtr c = cpck::ac_canon(sum);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_AcCanon);

}  // namespace

BENCHMARK_MAIN();
