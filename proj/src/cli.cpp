#include "ufpp/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "ufpp/hardness.hpp"
#include "ufpp/io.hpp"
#include "ufpp/its.hpp"
#include "ufpp/oracle.hpp"
#include "ufpp/pipeline.hpp"
#include "ufpp/random.hpp"

namespace ufpp::cli {

namespace {

namespace fs = std::filesystem;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::invalid_argument("cannot write " + path);
  file << text;
}

std::size_t state_budget_from_env() {
  const char* env = std::getenv("UFPP_STATE_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultStateBudget;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw std::invalid_argument("UFPP_STATE_BUDGET must be a positive integer");
  return static_cast<std::size_t>(v);
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) items.push_back(item);
  return items;
}

std::optional<i64> reference_opt(const Instance& inst, std::size_t budget) {
  if (inst.tasks.size() <= static_cast<std::size_t>(kDefaultOracleCap)) return brute_force(inst).profit;
  try {
    return exact_sweep(inst, budget).profit;
  } catch (const budget_exceeded&) {
    return std::nullopt;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unsplittable flow on a path: solvers, oracles and generators", "ufpp"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Run an approximation algorithm");
  std::string algo = "main", eps_text = "1", gamma_text = "1/2", beta_text = "1/2";
  std::string input, output, dump_path;
  int k_large = 2;
  std::optional<int> ell, q;
  bool log_repairs = false;
  solve_cmd->add_option("--algo", algo, "main|fast|large|small|ra|exact")
      ->check(CLI::IsMember({"main", "fast", "large", "small", "ra", "exact"}));
  solve_cmd->add_option("--eps", eps_text, "Accuracy parameter (rational, e.g. 1 or 1/2)");
  solve_cmd->add_option("--gamma", gamma_text, "Smallness margin for --algo small");
  solve_cmd->add_option("--k", k_large, "Largeness parameter for --algo large")->check(CLI::Range(2, 1 << 20));
  solve_cmd->add_option("--beta-aug", beta_text, "Capacity augmentation for --algo ra");
  solve_cmd->add_option("--ell", ell, "Override the group window width");
  solve_cmd->add_option("--q", q, "Override the offset gap (beta = 2^(1-q))");
  solve_cmd->add_option("-i,--input", input, "Instance file")->required();
  solve_cmd->add_option("-o,--output", output, "Solution file (default stdout)");
  solve_cmd->add_option("--dump-rects", dump_path, "Write task rectangles and capacity profile");
  solve_cmd->add_flag("--log-repairs", log_repairs, "Report feasibility repairs on stderr");

  // exact
  auto* exact_cmd = app.add_subcommand("exact", "Run an exact oracle");
  std::string method = "sweep";
  int oracle_cap = kDefaultOracleCap;
  exact_cmd->add_option("--method", method, "brute|sweep|its")->check(CLI::IsMember({"brute", "sweep", "its"}));
  exact_cmd->add_option("-i,--input", input, "Instance file")->required();
  exact_cmd->add_option("-o,--output", output, "Solution file (default stdout)");
  exact_cmd->add_option("--cap", oracle_cap, "Task cap for the exhaustive oracles");

  // check
  auto* check_cmd = app.add_subcommand("check", "Verify a solution against an instance");
  std::string solution_path;
  check_cmd->add_option("-i,--input", input, "Instance file")->required();
  check_cmd->add_option("-s,--solution", solution_path, "Solution JSON")->required();

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->require_subcommand(1);
  auto* gen_random_cmd = gen_cmd->add_subcommand("random", "Random instance");
  RandomParams params;
  std::uint64_t seed = 1;
  gen_random_cmd->add_option("--n", params.n, "Number of tasks")->check(CLI::NonNegativeNumber);
  gen_random_cmd->add_option("--m", params.m, "Number of edges")->check(CLI::PositiveNumber);
  gen_random_cmd->add_option("--maxcap", params.maxcap, "Largest capacity")->check(CLI::PositiveNumber);
  gen_random_cmd->add_option("--maxdemand", params.maxdemand, "Largest demand")->check(CLI::PositiveNumber);
  gen_random_cmd->add_option("--profit-style", params.profit_style, "uniform|proportional")
      ->check(CLI::IsMember({"uniform", "proportional"}));
  gen_random_cmd->add_option("--seed", seed, "Generator seed");
  gen_random_cmd->add_option("-o,--output", output, "Instance file (default stdout)");
  auto* gen_hard_cmd = gen_cmd->add_subcommand("hardness", "Instance from a subcubic graph");
  std::string graph_path;
  bool uniform = false;
  gen_hard_cmd->add_option("--graph", graph_path, "Graph file")->required();
  gen_hard_cmd->add_flag("--uniform", uniform, "Equalize capacities with dummy tasks");
  gen_hard_cmd->add_option("-o,--output", output, "Instance file; the certificate goes to <file>.cert")
      ->required();

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Run algorithms over a directory of instances");
  std::string dir, algos_text = "main,fast,large", csv_path;
  bench_cmd->add_option("--dir", dir, "Directory with *.ufpp files")->required();
  bench_cmd->add_option("--algos", algos_text, "Comma-separated algorithm list");
  bench_cmd->add_option("--eps", eps_text, "Accuracy parameter");
  bench_cmd->add_option("--csv", csv_path, "CSV output (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const std::size_t budget = state_budget_from_env();

    if (*solve_cmd) {
      const Instance inst = read_instance_file(input);
      SolveConfig config;
      config.algorithm = algo;
      config.eps = parse_rational(eps_text);
      config.gamma = parse_rational(gamma_text);
      config.beta_aug = parse_rational(beta_text);
      config.k_large = k_large;
      config.ell = ell;
      config.q = q;
      config.state_budget = budget;
      if (log_repairs) config.log = [&err](const std::string& msg) { err << msg << '\n'; };
      if (!dump_path.empty()) {
        std::ofstream dump(dump_path);
        if (!dump) throw std::invalid_argument("cannot write " + dump_path);
        dump_rects(dump, inst);
      }
      const Solution sol = solve(inst, config);
      const bool ok = check_feasible_scaled(inst, sol.selected, sol.capacity_scale.value_or(Rational(1))).feasible;
      write_text(output, solution_to_json(sol, ok), out);
      if (!output.empty()) out << "profit " << sol.profit << '\n';
      return kOk;
    }

    if (*exact_cmd) {
      const Instance inst = read_instance_file(input);
      OracleResult r;
      if (method == "brute")
        r = brute_force(inst, oracle_cap);
      else if (method == "sweep")
        r = exact_sweep(inst, budget);
      else
        r = max_its_brute(inst, oracle_cap);
      const Solution sol = make_solution(inst, r.witness, r.method);
      write_text(output, solution_to_json(sol, check_feasible(inst, sol.selected).feasible), out);
      return kOk;
    }

    if (*check_cmd) {
      const Instance inst = read_instance_file(input);
      const Solution sol = solution_from_json(slurp(solution_path));
      for (int id : sol.selected) inst.position_of(id);
      const i64 profit = profit_of(inst, sol.selected);
      if (profit != sol.profit) {
        err << "profit mismatch: file says " << sol.profit << ", recomputed " << profit << '\n';
        return kInvalid;
      }
      const Rational scale = sol.capacity_scale.value_or(Rational(1));
      const FeasibilityReport report = check_feasible_scaled(inst, sol.selected, scale);
      if (!report.feasible) {
        out << "infeasible\n";
        for (const Violation& v : report.violations)
          out << "edge " << v.edge << ": load " << v.load << " > capacity " << v.capacity
              << (scale == Rational(1) ? "" : " x " + scale.str()) << '\n';
        return kInvalid;
      }
      out << "feasible profit " << profit << '\n';
      return kOk;
    }

    if (*gen_random_cmd) {
      write_text(output, emit_instance(gen_random(params, seed)), out);
      return kOk;
    }

    if (*gen_hard_cmd) {
      const Graph g = read_graph_file(graph_path);
      const Reduction r = reduce(g, brooks_coloring(g));
      Instance inst = r.instance;
      std::optional<i64> expected;
      if (g.n <= 24) expected = certified_opt(r, mis_brute(g));
      if (uniform) {
        const Uniformized u = uniformize(inst);
        inst = u.instance;
        if (expected) expected = checked_add(*expected, u.opt_shift);
      }
      write_text(output, emit_instance(inst), out);
      write_text(output + ".cert", "expected_opt = " + (expected ? std::to_string(*expected) : "UNKNOWN") + "\n",
                 out);
      return kOk;
    }

    if (*bench_cmd) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".ufpp") files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      const std::vector<std::string> algos = split_list(algos_text);
      std::ostringstream csv;
      csv << kBenchVersion << '\n' << kBenchHeader << '\n';
      for (const fs::path& file : files) {
        const Instance inst = read_instance_file(file.string());
        const std::optional<i64> opt = reference_opt(inst, budget);
        for (const std::string& a : algos) {
          SolveConfig config;
          config.algorithm = a;
          config.eps = parse_rational(eps_text);
          config.state_budget = budget;
          const auto start = std::chrono::steady_clock::now();
          const Solution sol = solve(inst, config);
          const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
          csv << file.stem().string() << ',' << inst.tasks.size() << ',' << inst.m << ',' << a << ','
              << sol.profit << ',';
          if (opt) {
            csv << *opt << ',' << std::fixed << std::setprecision(6)
                << (*opt == 0 ? 1.0 : static_cast<double>(sol.profit) / static_cast<double>(*opt));
          } else {
            csv << ',';
          }
          csv << ',' << std::fixed << std::setprecision(6) << secs << '\n';
          csv.unsetf(std::ios::floatfield);
        }
      }
      write_text(csv_path, csv.str(), out);
      return kOk;
    }
  } catch (const budget_exceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const oracle_limit& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace ufpp::cli
