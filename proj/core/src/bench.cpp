#include "cpck/bench.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <sstream>
#include <thread>

#include "cpck/errors.hpp"
#include "cpck/solve.hpp"

namespace fs = std::filesystem;

namespace cpck {

namespace {

BenchRow run_one(const fs::path& problem, const fs::path& proof, const BenchOptions& opts) {
  BenchRow row;
  row.file = problem.filename().string();

  CheckReport rep = check_files(problem.string(), proof.string(), opts.check);
  row.steps_total = rep.steps_total;
  row.steps_checked = rep.steps_checked;
  row.holes = rep.holes;
  row.verdict = verdict_name(rep.verdict);
  row.check_ms = rep.wall_ms;

  if (!opts.solver_cmd.empty()) {
    try {
      Script script = parse_script(slurp(problem.string()));
      SolveResult solved = solve_external(script, opts.solver_cmd, opts.timeout_sec);
      row.solver_ms = solved.wall_ms;
    } catch (const Error&) {
      row.verdict = "solver_error";
      row.solver_ms = 0;
    }
  }
  return row;
}

}  // namespace

std::vector<BenchRow> bench_dir(const std::string& dir, const BenchOptions& opts) {
  std::vector<std::pair<fs::path, fs::path>> pairs;
  for (const fs::directory_entry& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".smt2") continue;
    fs::path proof = entry.path();
    proof.replace_extension(".cpcs");
    if (fs::exists(proof)) pairs.emplace_back(entry.path(), proof);
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first.filename() < b.first.filename(); });

  std::vector<BenchRow> rows(pairs.size());
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || pairs.size() <= 1) {
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      rows[k] = run_one(pairs[k].first, pairs[k].second, opts);
    }
    return rows;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= pairs.size()) return;
      rows[k] = run_one(pairs[k].first, pairs[k].second, opts);
    }
  };
  std::vector<std::thread> pool;
  int n = std::min<int>(jobs, static_cast<int>(pairs.size()));
  pool.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "file,steps_total,steps_checked,holes,verdict,solver_ms,check_ms\n";
  for (const BenchRow& r : rows) {
    out << r.file << ',' << r.steps_total << ',' << r.steps_checked << ',' << r.holes << ','
        << r.verdict << ',' << r.solver_ms << ',' << r.check_ms << '\n';
  }
  return out.str();
}

std::string bench_cactus(const std::vector<BenchRow>& rows) {
  std::vector<const BenchRow*> ok;
  for (const BenchRow& r : rows) {
    if (r.verdict == "valid" || r.verdict == "valid_with_holes") ok.push_back(&r);
  }
  std::sort(ok.begin(), ok.end(), [](const BenchRow* a, const BenchRow* b) {
    auto ta = a->solver_ms + a->check_ms;
    auto tb = b->solver_ms + b->check_ms;
    return ta != tb ? ta < tb : a->file < b->file;
  });
  std::ostringstream out;
  std::int64_t cumulative = 0;
  std::size_t k = 0;
  for (const BenchRow* r : ok) {
    cumulative += r->solver_ms + r->check_ms;
    out << ++k << ' ' << cumulative << ' ' << r->file << '\n';
  }
  return out.str();
}

}  // namespace cpck
