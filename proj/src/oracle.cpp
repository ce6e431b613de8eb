#include "ufpp/oracle.hpp"

#include <algorithm>
#include <functional>

#include "ufpp/its.hpp"

namespace ufpp {

namespace {

// Depth-first include/exclude search in id order. `can_add(p, chosen)` decides
// whether position p may join the current selection.
class SubsetSearch {
 public:
  SubsetSearch(const Instance& inst, std::function<bool(int, const std::vector<int>&)> can_add,
               std::function<void(int, int)> on_change)
      : inst_(inst), can_add_(std::move(can_add)), on_change_(std::move(on_change)) {
    suffix_.assign(inst.tasks.size() + 1, 0);
    for (std::size_t p = inst.tasks.size(); p-- > 0;)
      suffix_[p] = checked_add(suffix_[p + 1], inst.tasks[p].w);
  }

  OracleResult run(std::string method) {
    visit(0, 0);
    OracleResult r;
    r.profit = best_profit_;
    for (int p : best_) r.witness.push_back(inst_.tasks[p].id);
    std::sort(r.witness.begin(), r.witness.end());
    r.method = std::move(method);
    return r;
  }

 private:
  void visit(std::size_t p, i64 profit) {
    if (profit + suffix_[p] < best_profit_) return;
    if (p == inst_.tasks.size()) {
      if (profit > best_profit_ || (profit == best_profit_ && better_tie())) {
        best_profit_ = profit;
        best_ = chosen_;
      }
      return;
    }
    const int pos = static_cast<int>(p);
    if (can_add_(pos, chosen_)) {
      chosen_.push_back(pos);
      on_change_(pos, +1);
      visit(p + 1, profit + inst_.tasks[p].w);
      on_change_(pos, -1);
      chosen_.pop_back();
    }
    visit(p + 1, profit);
  }

  bool better_tie() const {
    auto ids = [&](const std::vector<int>& ps) {
      std::vector<int> out;
      for (int q : ps) out.push_back(inst_.tasks[q].id);
      std::sort(out.begin(), out.end());
      return out;
    };
    const auto a = ids(chosen_), b = ids(best_);
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
  }

  const Instance& inst_;
  std::function<bool(int, const std::vector<int>&)> can_add_;
  std::function<void(int, int)> on_change_;
  std::vector<i64> suffix_;
  std::vector<int> chosen_;
  std::vector<int> best_;
  i64 best_profit_ = 0;
};

void enforce_cap(const Instance& inst, int cap, const char* who) {
  if (static_cast<i64>(inst.tasks.size()) > cap)
    throw oracle_limit(std::string(who) + ": " + std::to_string(inst.tasks.size()) +
                       " tasks exceed the cap of " + std::to_string(cap));
}

}  // namespace

OracleResult brute_force(const Instance& inst, int cap) {
  enforce_cap(inst, cap, "brute_force");
  std::vector<i64> load(inst.m, 0);
  auto can_add = [&](int p, const std::vector<int>&) {
    const Task& task = inst.tasks[p];
    for (i64 e = task.s; e < task.t; ++e)
      if (load[e] + task.d > inst.capacities[e]) return false;
    return true;
  };
  auto on_change = [&](int p, int sign) {
    const Task& task = inst.tasks[p];
    for (i64 e = task.s; e < task.t; ++e) load[e] += sign * task.d;
  };
  return SubsetSearch(inst, can_add, on_change).run("subset_brute");
}

OracleResult exact_sweep(const Instance& inst, std::size_t state_budget) {
  std::vector<int> ids;
  for (const Task& task : inst.tasks) ids.push_back(task.id);
  Solution sol = solve_exact_bounded(inst, ids, inst.capacities, kUnboundedCrossing, state_budget);
  return {sol.profit, sol.selected, "sweep_dp"};
}

OracleResult max_its_brute(const Instance& inst, int cap) {
  enforce_cap(inst, cap, "max_its_brute");
  const std::size_t n = inst.tasks.size();
  std::vector<bool> ok(n);
  std::vector<Rect> rect(n);
  for (std::size_t p = 0; p < n; ++p) {
    const TaskMeta meta = bottleneck(inst, inst.tasks[p]);
    ok[p] = meta.slack >= 0;
    rect[p] = {inst.tasks[p].s, meta.b, inst.tasks[p].t, meta.slack};
  }
  auto can_add = [&](int p, const std::vector<int>& chosen) {
    if (!ok[p]) return false;
    for (int q : chosen)
      if (!compatible(rect[p], rect[q])) return false;
    return true;
  };
  return SubsetSearch(inst, can_add, [](int, int) {}).run("its_brute");
}

}  // namespace ufpp
