// cpck — check structured refutation proofs, translate goals to SMT-LIB,
// drive an external solver, and benchmark directories of problems.
//
// Exit codes: 0 ok; 10 proof valid but has holes; 20 proof invalid;
// 30 parse/translation error; 40 solver error.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cpck/bench.hpp"
#include "cpck/checker.hpp"
#include "cpck/errors.hpp"
#include "cpck/goal.hpp"
#include "cpck/solve.hpp"

namespace {

constexpr int kExitParse = 30;
constexpr int kExitSolver = 40;

int write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitParse;
  }
  out << content;
  return 0;
}

std::string env_solver() {
  const char* s = std::getenv("CPC_SOLVER");
  return s ? s : "";
}

int run_translate(const std::string& goal_file, const std::string& out_file) {
  try {
    cpck::Goal goal = cpck::parse_goal(cpck::slurp(goal_file));
    cpck::PreprocessResult pre = cpck::preprocess(goal);
    cpck::TranslateResult tr = cpck::translate(pre.goal);
    for (const cpck::Rewrite& rw : pre.rewrites) {
      std::cerr << "note: " << rw.reason << "\n";
    }
    return write_output(out_file, cpck::print_script(tr.script));
  } catch (const cpck::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

int run_check(const std::string& problem, const std::string& proof,
              const cpck::CheckOptions& opts) {
  cpck::CheckReport rep = cpck::check_files(problem, proof, opts);
  if (rep.verdict == cpck::Verdict::ParseFailure) {
    std::cout << proof << ": parse_error\n";
    std::cerr << "error: " << rep.parse_message << "\n";
    return cpck::verdict_exit_code(rep.verdict, opts);
  }
  std::cout << proof << ": " << cpck::verdict_name(rep.verdict) << " (steps=" << rep.steps_total
            << " checked=" << rep.steps_checked << " holes=" << rep.holes << ") " << rep.wall_ms
            << "ms\n";
  for (const cpck::StepFailure& f : rep.failures) {
    std::cout << "  step " << f.step_id << ": " << f.error.to_string() << "\n";
  }
  return cpck::verdict_exit_code(rep.verdict, opts);
}

int run_solve(const std::string& problem, const std::string& solver, int timeout,
              const std::string& out_file) {
  if (solver.empty()) {
    std::cerr << "error: no solver configured (use --solver or set CPC_SOLVER)\n";
    return kExitSolver;
  }
  try {
    cpck::Script script = cpck::parse_script(cpck::slurp(problem));
    cpck::SolveResult result = cpck::solve_external(script, solver, timeout);
    std::cout << cpck::solve_status_name(result.status) << "\n";
    if (result.status == cpck::SolveStatus::Unsat && !out_file.empty()) {
      return write_output(out_file, result.proof_text);
    }
    return 0;
  } catch (const cpck::SolverSpawnError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const cpck::SolverOutputUnparsable& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const cpck::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

int run_bench(const std::string& dir, const cpck::BenchOptions& opts, const std::string& csv) {
  try {
    std::vector<cpck::BenchRow> rows = cpck::bench_dir(dir, opts);
    if (csv.empty()) {
      std::cout << cpck::bench_csv(rows);
      return 0;
    }
    int rc = write_output(csv, cpck::bench_csv(rows));
    if (rc != 0) return rc;
    std::cout << cpck::bench_cactus(rows);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structured refutation proof checker"};
  app.require_subcommand(1);

  std::string goal_file, out_file;
  CLI::App* translate = app.add_subcommand("translate", "turn a goal file into an SMT-LIB script");
  translate->add_option("goal-file", goal_file, "goal description")->required();
  translate->add_option("-o,--output", out_file, "write the script here instead of stdout");

  std::string problem, proof;
  cpck::CheckOptions check_opts;
  CLI::App* check = app.add_subcommand("check", "check a proof against a problem");
  check->add_option("problem", problem, "SMT-LIB problem file")->required();
  check->add_option("proof", proof, "proof file")->required();
  CLI::Option* strict = check->add_flag("--strict", check_opts.strict, "reject holes");
  check->add_flag("--allow-holes", check_opts.allow_holes, "exit 0 even with holes")
      ->excludes(strict);
  check->add_flag("--keep-going", check_opts.keep_going, "report every failing step");

  std::string solver = env_solver();
  int timeout = -1;
  std::string solve_problem, proof_out;
  CLI::App* solve = app.add_subcommand("solve", "run an external solver on a problem");
  solve->add_option("problem", solve_problem, "SMT-LIB problem file")->required();
  solve->add_option("--solver", solver, "solver command; {file} marks the problem path");
  solve->add_option("--timeout", timeout, "seconds before the solver is killed");
  solve->add_option("-o,--output", proof_out, "write an unsat proof here");

  std::string bench_dir_arg, csv_file;
  cpck::BenchOptions bench_opts;
  bench_opts.solver_cmd = env_solver();
  CLI::App* bench = app.add_subcommand("bench", "check every problem/proof pair in a directory");
  bench->add_option("dir", bench_dir_arg, "directory of *.smt2 + *.cpcs pairs")->required();
  bench->add_option("--jobs", bench_opts.jobs, "files checked concurrently");
  bench->add_option("--csv", csv_file, "write results here and print a cactus listing");
  bench->add_option("--solver", bench_opts.solver_cmd, "also time this solver on each problem");
  bench->add_option("--timeout", bench_opts.timeout_sec, "per-problem solver timeout");

  CLI11_PARSE(app, argc, argv);

  if (translate->parsed()) return run_translate(goal_file, out_file);
  if (check->parsed()) return run_check(problem, proof, check_opts);
  if (solve->parsed()) return run_solve(solve_problem, solver, timeout, proof_out);
  if (bench->parsed()) return run_bench(bench_dir_arg, bench_opts, csv_file);
  return 0;
}
