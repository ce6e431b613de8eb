// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "graphs.hpp"
#include "support.hpp"
#include "ufpp/framework.hpp"
#include "ufpp/hardness.hpp"
#include "ufpp/its.hpp"
#include "ufpp/oracle.hpp"
#include "ufpp/pipeline.hpp"
#include "ufpp/tiny_lp.hpp"

using namespace ufpp;
using namespace ufpp::testing;

namespace {

// Pinned limits.
constexpr double kLimitTransforms = 60.0;     // criterion 1
constexpr double kLimitIts = 300.0;           // criterion 2
constexpr double kLimitHardness = 600.0;      // criterion 12
constexpr double kLimitPerformance = 60.0;    // criterion 13
constexpr double kTinyPassRate = 0.99;        // criterion 10
constexpr i64 kFastNum = 2512, kFastDen = 100;  // criterion 8: ratio 25.12

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<int> ids_of(const Instance& inst) {
  std::vector<int> ids;
  for (const Task& t : inst.tasks) ids.push_back(t.id);
  return ids;
}

std::vector<int> random_feasible_subset(const Instance& inst, std::uint64_t seed) {
  XorShift64Star rng(seed);
  std::vector<int> F;
  for (const Task& t : inst.tasks) {
    if (rng.uniform(0, 3) == 0) continue;
    F.push_back(t.id);
    if (!check_feasible(inst, F).feasible) F.pop_back();
  }
  return F;
}

// Shared mixed corpus for criteria 7-9.
std::vector<Instance> mixed_corpus() {
  std::vector<Instance> corpus;
  for (std::uint64_t seed = 1; seed <= 500; ++seed)
    corpus.push_back(random_mixed(7000 + seed, 1 + static_cast<int>(seed % 12), 2 + static_cast<i64>(seed % 7),
                                  seed % 2 ? 64 : 16, seed % 2 ? 48 : 16));
  return corpus;
}

std::vector<i64> corpus_opt(const std::vector<Instance>& corpus) {
  std::vector<i64> opt;
  for (const Instance& inst : corpus) opt.push_back(brute_force(inst).profit);
  return opt;
}

std::size_t its_outputs_checked = 0;
std::size_t its_outputs_bad = 0;

Solution checked_max_its(const Instance& inst, MaxItsStats* stats = nullptr) {
  Solution sol = max_its(inst, stats);
  ++its_outputs_checked;
  if (!is_its(inst, sol.selected) || !check_feasible(inst, sol.selected).feasible) ++its_outputs_bad;
  return sol;
}

void c1(Outcome& o) {
  const auto t0 = Clock::now();
  std::size_t subsets = 0;
  for (std::uint64_t seed = 1; seed <= 500 && o.pass; ++seed) {
    const Instance inst = random_mixed(seed, 1 + static_cast<int>(seed % 10), 1 + static_cast<i64>(seed % 8), 12, 10);
    const Instance p = perturb(inst);
    const Instance c = compact(inst).instance;
    if (ids_of(c) != ids_of(inst) || ids_of(p) != ids_of(inst)) o.fail("transform reordered tasks");
    const auto n = static_cast<std::uint32_t>(inst.tasks.size());
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask, ++subsets) {
      const bool f = naive_feasible(inst, mask);
      if (naive_feasible(p, mask) != f) o.fail("perturb seed " + std::to_string(seed));
      if (naive_feasible(c, mask) != f) o.fail("compact seed " + std::to_string(seed));
    }
  }
  const double secs = since(t0);
  if (secs >= kLimitTransforms) o.fail("time limit");
  o.detail << "500 instances, " << subsets << " subsets, " << secs << " s";
}

void c2(Outcome& o) {
  const auto t0 = Clock::now();
  i64 total = 0;
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const Instance inst =
        random_mixed(20000 + seed, 1 + static_cast<int>(seed % 14), 1 + static_cast<i64>(seed % 10), 10, 10);
    const i64 dp = checked_max_its(inst).profit, brute = max_its_brute(inst).profit;
    if (dp != brute) o.fail("seed " + std::to_string(seed) + ": " + std::to_string(dp) + " vs " + std::to_string(brute));
    total += brute;
  }
  const double secs = since(t0);
  if (secs >= kLimitIts) o.fail("time limit");
  o.detail << "1000 instances, total ITS profit " << total << ", " << secs << " s";
}

void c3(Outcome& o) {
  // Extra outputs on larger instances beyond those collected by criteria 2, 4-6 and 13.
  for (std::uint64_t seed = 1; seed <= 300; ++seed) checked_max_its(random_mixed(30000 + seed, 40, 20, 50, 40));
  if (its_outputs_bad != 0) o.fail(std::to_string(its_outputs_bad) + " outputs not feasible ITS");
  o.detail << its_outputs_checked << " max_its outputs checked with is_its and check_feasible";
}

void c4(Outcome& o) {
  for (int k = 2; k <= 5; ++k) {
    const Instance inst = tight_instance(k);
    const std::vector<int> all = ids_of(inst);
    if (all.size() != static_cast<std::size_t>(2 * k)) o.fail("task count");
    if (!classify(inst, Rational(1, k)).small.empty()) o.fail("not all 1/k-large at k=" + std::to_string(k));
    if (!check_feasible(inst, all).feasible) o.fail("full set infeasible at k=" + std::to_string(k));
    for (const Task& a : inst.tasks)
      for (const Task& b : inst.tasks)
        if (a.id < b.id && compatible(rectangle(inst, a), rectangle(inst, b))) o.fail("compatible pair");
    if (checked_max_its(inst).selected.size() != 1) o.fail("max_its picked more than one task");
  }
  o.detail << "k = 2..5";
}

void c5(Outcome& o) {
  std::size_t max_colors = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const Instance inst = random_large(40000 + seed, 18, 3 + static_cast<i64>(seed % 8), 80, 2);
    const std::vector<int> F = random_feasible_subset(inst, seed);
    const Coloring col = nice_coloring(inst, F, 2);
    std::map<int, std::vector<int>> classes;
    for (const auto& [id, c] : col) classes[c].push_back(id);
    max_colors = std::max(max_colors, classes.size());
    if (classes.size() > 4) o.fail("more than 4 classes at seed " + std::to_string(seed));
    for (const auto& [c, ids] : classes)
      if (!is_its(inst, ids)) o.fail("class not an ITS at seed " + std::to_string(seed));
    const std::string why = validate_nice_coloring(inst, F, 2, col);
    if (!why.empty()) o.fail(why);
    const i64 wF = profit_of(inst, F);
    if (4 * checked_max_its(restrict_to(inst, F)).profit < wF) o.fail("max_its(F) < w(F)/4");
    if (4 * checked_max_its(inst).profit < wF) o.fail("max_its < w(F)/4");
  }
  o.detail << "500 feasible 1/2-large sets, at most " << max_colors << " colors";
}

void c6(Outcome& o) {
  double sum = 0;
  double worst = 1;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const Instance inst =
        random_large(50000 + seed, 1 + static_cast<int>(seed % 12), 2 + static_cast<i64>(seed % 7), 40, 2);
    const i64 opt = brute_force(inst).profit;
    const i64 got = solve_large(inst, 2).profit;
    if (4 * got < opt) o.fail("seed " + std::to_string(seed));
    const double r = opt == 0 ? 1.0 : static_cast<double>(got) / static_cast<double>(opt);
    sum += r;
    worst = std::min(worst, r);
  }
  o.detail << "mean ratio " << sum / 500 << ", worst " << worst << " (bound 0.25)";
}

template <class F>
void ratio_check(Outcome& o, const std::vector<Instance>& corpus, const std::vector<i64>& opt, F solve_one,
                 i64 num, i64 den, const char* bound) {
  double sum = 0, worst = 1;
  for (std::size_t j = 0; j < corpus.size(); ++j) {
    const Solution sol = solve_one(corpus[j]);
    const Rational scale = sol.capacity_scale.value_or(Rational(1));
    if (!check_feasible_scaled(corpus[j], sol.selected, scale).feasible) o.fail("infeasible on instance " + std::to_string(j));
    // profit >= opt * den / num
    if (i128{sol.profit} * num < i128{opt[j]} * den) o.fail("ratio on instance " + std::to_string(j));
    const double r = opt[j] == 0 ? 1.0 : static_cast<double>(sol.profit) / static_cast<double>(opt[j]);
    sum += r;
    worst = std::min(worst, r);
  }
  o.detail << corpus.size() << " instances, mean ratio " << sum / static_cast<double>(corpus.size()) << ", worst "
           << worst << " (bound " << bound << ")";
}

void c9(Outcome& o, const std::vector<Instance>& corpus, const std::vector<i64>& opt) {
  const RaParams p = choose_ra_params(Rational(1), Rational(1, 2));
  if (p.q != 3 || p.capacity_scale != Rational(3, 2)) o.fail("q != 3");
  ratio_check(
      o, corpus, opt,
      [](const Instance& inst) {
        Solution s = solve_ra(inst, Rational(1), Rational(1, 2));
        if (!s.capacity_scale || *s.capacity_scale != Rational(3, 2)) s.capacity_scale = Rational(1);
        return s;
      },
      3, 1, "1/3 at capacities x 3/2");
}

Instance uniform_demand_instance(std::uint64_t seed) {
  XorShift64Star rng(seed);
  Instance inst;
  inst.m = rng.uniform(1, 6);
  for (i64 e = 0; e < inst.m; ++e) inst.capacities.push_back(rng.uniform(1, 4));
  const int n = static_cast<int>(rng.uniform(1, 12));
  for (int id = 0; id < n; ++id) {
    Task t;
    t.id = id;
    t.s = rng.uniform(0, inst.m - 1);
    t.t = rng.uniform(t.s + 1, inst.m);
    t.d = 1;
    t.w = rng.uniform(0, 30);
    inst.tasks.push_back(t);
  }
  return inst;
}

Instance tiny_corpus_instance(std::uint64_t seed) {
  XorShift64Star rng(seed);
  Instance inst;
  inst.m = rng.uniform(2, 8);
  for (i64 e = 0; e < inst.m; ++e) inst.capacities.push_back(rng.uniform(18, 600));
  const int n = static_cast<int>(rng.uniform(1, 12));
  for (int id = 0; id < n; ++id) {
    Task t;
    t.id = id;
    t.s = rng.uniform(0, inst.m - 1);
    t.t = rng.uniform(t.s + 1, inst.m);
    t.d = rng.uniform(1, min_cap(inst, t) / 9);
    t.w = rng.uniform(1, 100);
    inst.tasks.push_back(t);
  }
  return inst;
}

void c10(Outcome& o) {
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const Instance inst = uniform_demand_instance(60000 + seed);
    std::vector<Interval> ivs;
    for (const Task& t : inst.tasks) ivs.push_back({t.s, t.t, t.w});
    i64 got = 0;
    for (int j : solve_uniform(inst.capacities, ivs)) got += ivs[j].w;
    if (got != naive_opt(inst)) o.fail("solve_uniform seed " + std::to_string(seed));
  }

  // delta = 1/9, beta = 1/16, ell = 3: delta' = 16/135
  const Rational delta(1, 9);
  const mpq_class f_lo = f_delta(Rational(16, 135)).lo;
  int good = 0, groups = 0, repairs = 0;
  std::vector<std::string> shortfalls;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const Instance inst = tiny_corpus_instance(70000 + seed);
    const GroupPlan plan = group(inst, 3, 5, Rational(1, 16));
    bool ok = true;
    for (const auto& [k, ids] : plan.groups) {
      ++groups;
      const std::vector<int> out =
          solve_tiny(inst, plan, k, ids, delta, [&](const std::string&) { ++repairs; });
      if (!check_modified(inst, plan, k, out)) o.fail("check_modified at seed " + std::to_string(seed));
      const mpq_class lp = lp_opt(inst, ids, modified_capacities(inst, plan, k)).value;
      if (f_lo * profit_of(inst, out) < lp) {
        ok = false;
        shortfalls.push_back("seed " + std::to_string(seed) + " group " + std::to_string(k));
      }
    }
    good += ok ? 1 : 0;
  }
  for (const std::string& s : shortfalls) std::cerr << "  criterion 10 shortfall: " << s << '\n';
  const double rate = good / 500.0;
  if (rate < kTinyPassRate) o.fail("ratio pass rate " + std::to_string(rate));
  o.detail << "solve_uniform 500/500 exact; solve_tiny " << groups << " groups feasible, ratio met on " << good
           << "/500 corpora, " << repairs << " repairs";
}

void c11(Outcome& o) {
  const FValue a = f_delta(Rational(16, 135));
  if (!(a.hi < mpq_class(2503, 1000))) o.fail("f(16/135) >= 2.503");
  const FValue b = f_delta(Rational(1, 4));
  if (b.lo != 6 || b.hi != 6) o.fail("f(1/4) != 6");
  o.detail << "f(16/135) in [" << std::setprecision(12) << a.lo.get_d() << ", " << a.hi.get_d() << "], f(1/4) = "
           << b.lo.get_str();
}

void c12(Outcome& o) {
  const auto t0 = Clock::now();
  int brute_used = 0, sweep_used = 0;
  for (const auto& [name, g] : hardness_graphs()) {
    const int mis = mis_brute(g);
    const Reduction r = reduce(g, brooks_coloring(g));
    i64 base = 0;
    for (int i = 1; i <= g.n; ++i)
      base += i64{brooks_coloring(g)[i - 1]} * g.n * (static_cast<i64>(g.edges.size()) + i);
    if (base != r.base_profit) o.fail(name + ": base profit");
    const bool small = r.instance.tasks.size() <= static_cast<std::size_t>(kDefaultOracleCap);
    const OracleResult opt = small ? brute_force(r.instance) : exact_sweep(r.instance);
    (small ? brute_used : sweep_used)++;
    if (opt.profit != mis + base) o.fail(name + ": OPT");
    const std::vector<int> is = recover_independent_set(r, opt.witness);
    if (static_cast<int>(is.size()) != mis) o.fail(name + ": recovered set size");
    for (auto [a, b] : g.edges)
      if (std::count(is.begin(), is.end(), a) && std::count(is.begin(), is.end(), b)) o.fail(name + ": not independent");

    const Uniformized u = uniformize(r.instance);
    i64 deficit = 0;
    const i64 umax = r.instance.max_capacity();
    for (i64 c : r.instance.capacities) deficit += umax - c;
    if (u.opt_shift != u.dummy_profit * deficit) o.fail(name + ": shift formula");
    const i64 uopt = u.instance.tasks.size() <= static_cast<std::size_t>(kDefaultOracleCap)
                         ? brute_force(u.instance).profit
                         : exact_sweep(u.instance).profit;
    if (uopt != opt.profit + u.dummy_profit * deficit) o.fail(name + ": uniformized OPT");
  }
  const double secs = since(t0);
  if (secs >= kLimitHardness) o.fail("time limit");
  o.detail << "30 graphs (" << brute_used << " by subset enumeration, " << sweep_used << " by sweep DP), " << secs
           << " s";
}

void c13(Outcome& o) {
  RandomParams p;
  p.n = 200;
  p.m = 399;
  p.maxcap = 1000;
  p.maxdemand = 600;
  const Instance inst = gen_random(p, 13);
  MaxItsStats stats;
  const auto t0 = Clock::now();
  const Solution sol = checked_max_its(inst, &stats);
  const double secs = since(t0);
  const std::size_t m = 399, bound = (m + 1) * (m + 2) * (m + 2);
  if (secs >= kLimitPerformance) o.fail("time limit");
  if (stats.memo_size > stats.memo_limit || stats.memo_size > bound) o.fail("memo size");
  o.detail << "n=200 m=399: " << secs << " s, memo " << stats.memo_size << " <= " << stats.memo_limit
           << " (working m=" << stats.working_m << "), profit " << sol.profit;
}

}  // namespace

int main() {
  const std::vector<Instance> corpus = mixed_corpus();
  const std::vector<i64> opt = corpus_opt(corpus);

  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"perturbation/compaction equivalence", c1},
      {"ITS DP equals exhaustive ITS optimum", c2},
      {"tight family", c4},
      {"nice coloring", c5},
      {"large-task ratio >= 1/4", c6},
      {"main ratio >= 1/8",
       [&](Outcome& o) {
         ratio_check(o, corpus, opt, [](const Instance& i) { return solve_main(i, Rational(1)); }, 8, 1, "1/8");
       }},
      {"fast ratio >= 1/25.12",
       [&](Outcome& o) {
         ratio_check(o, corpus, opt, [](const Instance& i) { return solve_fast(i); }, kFastNum, kFastDen,
                     "100/2512");
       }},
      {"resource augmentation", [&](Outcome& o) { c9(o, corpus, opt); }},
      {"tiny-task stack", c10},
      {"f values", c11},
      {"hardness end-to-end", c12},
      {"performance smoke", c13},
      {"ITS outputs are feasible", c3},
  };
  // Criterion numbers in reporting order.
  const std::vector<int> number{1, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 3};

  bool all = true;
  std::vector<std::string> lines(14);
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    Outcome o;
    try {
      criteria[j].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " [" << std::setw(2) << number[j] << "] " << criteria[j].first << ": "
         << o.detail.str();
    lines[number[j]] = line.str();
  }
  for (int j = 1; j <= 13; ++j) std::cout << lines[j] << '\n';
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << std::endl;
  return all ? 0 : 1;
}
