#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lsape/duals.hpp"
#include "lsape/generate.hpp"
#include "lsape/hungarian.hpp"
#include "lsape/io.hpp"
#include "lsape/lsap.hpp"
#include "lsape/oracle.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;

struct RangeOpt {
  double lo = 0.0;
  double hi = 10.0;
};

RangeOpt parse_range(const std::string& text) {
  RangeOpt r;
  std::istringstream in(text);
  char sep = 0;
  if (!(in >> r.lo >> sep >> r.hi) || sep != ':' || !in.eof())
    throw CLI::ValidationError("--range expects lo:hi");
  return r;
}

lsape::SolveResult<double> run_solver(const lsape::EditCostMatrix<double>& c,
                                      const std::string& solver,
                                      bool no_preprocess) {
  if (solver == "slsape") return lsape::solve_via_slsape(c);
  lsape::SolveOptions opts;
  opts.preprocess = !no_preprocess;
  return lsape::solve(c, opts);
}

json result_to_json(const lsape::SolveResult<double>& r,
                    const std::string& solver) {
  return json{{"rho", r.assignment.rho},
              {"varrho", r.assignment.varrho},
              {"u", r.duals.u},
              {"v", r.duals.v},
              {"cost", r.objective},
              {"solver", solver},
              {"stats",
               {{"augmentations", r.stats.augmentations},
                {"dual_updates", r.stats.dual_updates},
                {"zero_delta_updates", r.stats.zero_delta_updates}}}};
}

int cmd_solve(const std::string& path, const std::string& solver,
              bool no_preprocess, double tol) {
  lsape::EditCostMatrix<double> c = lsape::read_matrix_file(path);
  lsape::SolveResult<double> r = run_solver(c, solver, no_preprocess);
  if (!lsape::check_slackness(r.assignment, r.duals, c, tol)) {
    std::cerr << "error: solution failed the slackness self-check\n";
    return kExitVerifyFail;
  }
  std::cout << result_to_json(r, solver).dump(2) << '\n';
  return kExitOk;
}

int cmd_generate(const lsape::GeneratorSpec& spec, bool integral) {
  std::vector<std::string> header = {
      "family=" + lsape::family_name(spec.family) +
          " n=" + std::to_string(spec.n) + " m=" + std::to_string(spec.m),
      "seed=" + std::to_string(spec.seed) + " rng=splitmix64 range=[" +
          std::to_string(spec.lo) + "," + std::to_string(spec.hi) + ")"};
  if (integral)
    lsape::write_matrix(std::cout, lsape::generate_int(spec), header);
  else
    lsape::write_matrix(std::cout, lsape::generate(spec), header);
  return kExitOk;
}

int cmd_verify(const std::string& instance_path,
               const std::string& solution_path, double tol) {
  std::cout.precision(17);
  lsape::EditCostMatrix<double> c = lsape::read_matrix_file(instance_path);
  std::ifstream sol_in(solution_path);
  if (!sol_in) throw std::runtime_error("cannot open " + solution_path);
  json sol = json::parse(sol_in);

  lsape::EpsilonAssignment a;
  a.rho = sol.at("rho").get<std::vector<int>>();
  a.varrho = sol.at("varrho").get<std::vector<int>>();

  bool pass = true;
  const lsape::Validity validity = lsape::validate_assignment(a, c.n(), c.m());
  switch (validity) {
    case lsape::Validity::Complete: std::cout << "validity: complete\n"; break;
    case lsape::Validity::Partial:
      std::cout << "validity: partial\n";
      pass = false;
      break;
    case lsape::Validity::Invalid:
      std::cout << "validity: invalid\n";
      std::cout << "verdict: fail\n";
      return kExitVerifyFail;
  }

  if (validity == lsape::Validity::Complete) {
    const double cost = lsape::assignment_cost(a, c);
    if (sol.contains("cost")) {
      const double claimed = sol.at("cost").get<double>();
      const bool ok = std::abs(cost - claimed) <= tol;
      std::cout << "cost: claimed " << claimed << ", recomputed " << cost
                << (ok ? " (ok)\n" : " (mismatch)\n");
      pass = pass && ok;
    } else {
      std::cout << "cost: recomputed " << cost << '\n';
    }
  }

  if (sol.contains("u") && sol.contains("v")) {
    lsape::DualVariables<double> d;
    d.u = sol.at("u").get<std::vector<double>>();
    d.v = sol.at("v").get<std::vector<double>>();
    const bool feasible = lsape::dual_feasible(d, c, tol);
    std::cout << "dual feasibility: " << (feasible ? "ok" : "violated") << '\n';
    bool slack = false;
    if (feasible && validity != lsape::Validity::Invalid) {
      slack = lsape::check_slackness(a, d, c, tol);
      std::cout << "slackness: " << (slack ? "ok" : "violated") << '\n';
    }
    pass = pass && feasible && slack;
  }

  std::cout << "verdict: " << (pass ? "pass" : "fail") << '\n';
  return pass ? kExitOk : kExitVerifyFail;
}

struct BenchSweep {
  std::vector<std::pair<int, int>> sizes;
};

BenchSweep parse_sizes(const std::string& text) {
  BenchSweep sweep;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::istringstream pair_in(item);
    int n = -1, m = -1;
    char sep = 0;
    if (!(pair_in >> n >> sep >> m) || sep != ':' || n < 0 || m < 0)
      throw CLI::ValidationError("--sizes expects n:m[,n:m...]");
    sweep.sizes.emplace_back(n, m);
  }
  if (sweep.sizes.empty()) throw CLI::ValidationError("empty --sizes");
  return sweep;
}

BenchSweep parse_m_range(int n, const std::string& text) {
  std::istringstream in(text);
  int lo = -1, hi = -1, step = -1;
  char s1 = 0, s2 = 0;
  if (!(in >> lo >> s1 >> hi >> s2 >> step) || s1 != ':' || s2 != ':' ||
      lo < 0 || hi < lo || step <= 0)
    throw CLI::ValidationError("--m-range expects lo:hi:step");
  BenchSweep sweep;
  for (int m = lo; m <= hi; m += step) sweep.sizes.emplace_back(n, m);
  return sweep;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

template <typename Fn>
std::pair<double, double> time_reps(int reps, Fn&& fn) {
  std::vector<double> times(reps);
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    times[r] = seconds_since(start);
  }
  std::sort(times.begin(), times.end());
  double mean = 0;
  for (double t : times) mean += t;
  mean /= reps;
  const double median = (reps % 2 == 1)
                            ? times[reps / 2]
                            : 0.5 * (times[reps / 2 - 1] + times[reps / 2]);
  return {median, mean};
}

int cmd_bench(const std::vector<std::string>& family_names,
              const BenchSweep& sweep, int reps, std::uint64_t seed,
              const RangeOpt& range, const std::string& out_path) {
  std::ofstream out_file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    out_file.open(out_path);
    if (!out_file) throw std::runtime_error("cannot open " + out_path);
    out = &out_file;
  }
  *out << "family,n,m,solver,reps,median_s,mean_s\n";
  std::uint64_t instance_seed = seed;
  for (const std::string& fname : family_names) {
    const lsape::Family family = lsape::family_from_name(fname);
    for (const auto& [n, m] : sweep.sizes) {
      lsape::GeneratorSpec spec{family, n, m, instance_seed++, range.lo,
                                range.hi};
      // one instance per size, shared by both solvers
      const lsape::EditCostMatrix<double> c = lsape::generate(spec);
      const auto [lsape_med, lsape_mean] =
          time_reps(reps, [&] { lsape::solve(c); });
      const auto [sq_med, sq_mean] =
          time_reps(reps, [&] { lsape::solve_via_slsape(c); });
      *out << fname << ',' << n << ',' << m << ",lsape," << reps << ','
           << lsape_med << ',' << lsape_mean << '\n';
      *out << fname << ',' << n << ',' << m << ",slsape," << reps << ','
           << sq_med << ',' << sq_mean << '\n';
    }
  }
  return kExitOk;
}

int run(CLI::App& app, int argc, char** argv) {
  app.require_subcommand(1);

  // solve
  std::string instance_path;
  std::string solver = "lsape";
  bool no_preprocess = false;
  // instances are parsed as decimal doubles, so comparisons default to a
  // small absolute tolerance; pass 0 to force exact checks
  double tolerance = 1e-9;
  CLI::App* solve = app.add_subcommand("solve", "solve an instance file");
  solve->add_option("instance", instance_path, "instance file")->required();
  solve->add_option("--solver", solver, "lsape or slsape")
      ->check(CLI::IsMember({"lsape", "slsape"}));
  solve->add_flag("--no-preprocess", no_preprocess,
                  "start from the empty assignment");
  solve->add_option("--tolerance", tolerance, "comparison tolerance");

  // generate
  std::string family = "uniform-random";
  int gen_n = 0, gen_m = 0;
  std::uint64_t seed = 0;
  std::string range_text;
  bool integral = false;
  CLI::App* generate =
      app.add_subcommand("generate", "write an instance to stdout");
  generate->add_option("--family", family, "instance family")
      ->check(CLI::IsMember({"uniform-random", "product", "flipped-product"}));
  generate->add_option("--n", gen_n, "source set size")->required();
  generate->add_option("--m", gen_m, "target set size")->required();
  generate->add_option("--seed", seed, "RNG seed");
  generate->add_option("--range", range_text, "value range lo:hi");
  generate->add_flag("--integer", integral, "draw integer values");

  // verify
  std::string solution_path;
  CLI::App* verify =
      app.add_subcommand("verify", "check a solution against an instance");
  verify->add_option("instance", instance_path, "instance file")->required();
  verify->add_option("solution", solution_path, "solution JSON")->required();
  verify->add_option("--tolerance", tolerance, "comparison tolerance");

  // count
  CLI::App* count = app.add_subcommand(
      "count", "number of complete assignments between sizes n and m");
  count->add_option("--n", gen_n, "source set size")->required();
  count->add_option("--m", gen_m, "target set size")->required();

  // bench
  std::string sizes_text, m_range_text, out_path;
  std::string families_text = "uniform-random";
  int bench_n = 0;
  int reps = 5;
  CLI::App* bench =
      app.add_subcommand("bench", "time both solvers over a size sweep");
  bench->add_option("--families", families_text,
                    "comma-separated instance families");
  bench->add_option("--sizes", sizes_text, "explicit sizes n:m[,n:m...]");
  bench->add_option("--n", bench_n, "fixed n for --m-range sweeps");
  bench->add_option("--m-range", m_range_text, "m sweep lo:hi:step");
  bench->add_option("--reps", reps, "repetitions per measurement")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "base RNG seed");
  bench->add_option("--range", range_text, "value range lo:hi");
  bench->add_option("--out", out_path, "CSV output file (default stdout)");

  app.parse(argc, argv);

  if (*solve)
    return cmd_solve(instance_path, solver, no_preprocess, tolerance);
  if (*generate) {
    RangeOpt range = range_text.empty() ? RangeOpt{} : parse_range(range_text);
    lsape::GeneratorSpec spec{lsape::family_from_name(family), gen_n, gen_m,
                              seed, range.lo, range.hi};
    return cmd_generate(spec, integral);
  }
  if (*verify) return cmd_verify(instance_path, solution_path, tolerance);
  if (*count) {
    if (gen_n < 0 || gen_m < 0) throw CLI::ValidationError("negative size");
    std::cout << lsape::count_assignments(gen_n, gen_m) << '\n';
    return kExitOk;
  }
  if (*bench) {
    BenchSweep sweep;
    if (!sizes_text.empty())
      sweep = parse_sizes(sizes_text);
    else if (!m_range_text.empty())
      sweep = parse_m_range(bench_n, m_range_text);
    else
      throw CLI::ValidationError("bench needs --sizes or --m-range");
    RangeOpt range = range_text.empty() ? RangeOpt{} : parse_range(range_text);
    std::vector<std::string> family_names;
    std::istringstream in(families_text);
    std::string item;
    while (std::getline(in, item, ',')) family_names.push_back(item);
    return cmd_bench(family_names, sweep, reps, seed, range, out_path);
  }
  return kExitInputError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear sum assignment with edition: solver and tools"};
  try {
    return run(app, argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}
