#include "ufpp/medium_dp.hpp"

#include <algorithm>
#include <unordered_map>

#include "ufpp/framework.hpp"

namespace ufpp {

namespace {

struct OpenSetHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

struct SweepState {
  std::vector<int> open;  // positions, sorted
  i64 profit = 0;
  i64 load = 0;
  int chain = -1;  // arena node of the last selected task
};

struct ChainNode {
  int position;
  int parent;
};

}  // namespace

Solution solve_exact_bounded(const Instance& inst, std::span<const int> ids,
                             std::span<const i64> capacities, std::size_t crossing_bound,
                             std::size_t state_budget) {
  if (static_cast<i64>(capacities.size()) != inst.m)
    throw std::invalid_argument("solve_exact_bounded: capacity vector has wrong length");
  std::vector<std::vector<int>> starts(inst.m + 1);
  std::vector<int> positions;
  for (int id : ids) positions.push_back(static_cast<int>(inst.position_of(id)));
  std::sort(positions.begin(), positions.end(),
            [&](int a, int b) { return inst.tasks[a].id < inst.tasks[b].id; });
  for (int p : positions) starts[inst.tasks[p].s].push_back(p);

  std::vector<ChainNode> arena;
  std::vector<SweepState> states(1);
  auto guard = [&](std::size_t live) {
    if (live > state_budget)
      throw budget_exceeded("sweep DP exceeded the state budget of " + std::to_string(state_budget) +
                            " live states; the instance is outside desk scale");
  };

  for (i64 v = 0; v <= inst.m; ++v) {
    if (v > 0) {
      // Close tasks ending at v and merge states that became identical.
      std::vector<SweepState> merged;
      std::unordered_map<std::vector<int>, std::size_t, OpenSetHash> where;
      for (SweepState& st : states) {
        SweepState next;
        next.profit = st.profit;
        next.chain = st.chain;
        next.load = st.load;
        for (int p : st.open) {
          if (inst.tasks[p].t == v)
            next.load -= inst.tasks[p].d;
          else
            next.open.push_back(p);
        }
        auto [it, fresh] = where.emplace(next.open, merged.size());
        if (fresh)
          merged.push_back(std::move(next));
        else if (next.profit > merged[it->second].profit)
          merged[it->second] = std::move(next);
      }
      states = std::move(merged);
    }
    if (v == inst.m) break;

    const i64 cap = capacities[v];
    for (int p : starts[v]) {
      const Task& task = inst.tasks[p];
      const std::size_t before = states.size();
      for (std::size_t k = 0; k < before; ++k) {
        const SweepState& st = states[k];
        if (st.load + task.d > cap || st.open.size() >= crossing_bound) continue;
        SweepState next;
        next.open = st.open;
        next.open.insert(std::upper_bound(next.open.begin(), next.open.end(), p), p);
        next.profit = checked_add(st.profit, task.w);
        next.load = st.load + task.d;
        arena.push_back({p, st.chain});
        next.chain = static_cast<int>(arena.size()) - 1;
        states.push_back(std::move(next));
      }
      guard(states.size());
    }
    // Capacity of edge v applies to tasks carried over from earlier edges too.
    std::erase_if(states, [&](const SweepState& st) { return !st.open.empty() && st.load > cap; });
    guard(states.size());
  }

  const SweepState& best = states.front();
  std::vector<int> selected;
  for (int node = best.chain; node >= 0; node = arena[node].parent)
    selected.push_back(inst.tasks[arena[node].position].id);
  return make_solution(inst, std::move(selected), "sweep");
}

std::size_t crossing_bound(int ell, const Rational& delta, std::size_t cap) {
  if (delta <= Rational(0)) throw std::invalid_argument("crossing_bound: delta must be positive");
  if (ell + 1 > 80) return cap;
  const i128 numerator = (i128{1} << (ell + 1)) * delta.den();
  const i128 bound = (numerator + delta.num() - 1) / delta.num();
  return bound >= static_cast<i128>(cap) ? cap : static_cast<std::size_t>(bound);
}

std::pair<std::vector<int>, std::vector<int>> two_partition(const Instance& inst, const GroupPlan& plan,
                                                            int k, std::span<const int> F) {
  auto git = plan.groups.find(k);
  for (int id : F)
    if (git == plan.groups.end() ||
        !std::binary_search(git->second.begin(), git->second.end(), id))
      throw std::invalid_argument("two_partition: task " + std::to_string(id) + " is not in group " +
                                  std::to_string(k));
  if (!check_feasible(inst, F).feasible) throw std::invalid_argument("two_partition: set is infeasible");

  std::vector<int> order(F.begin(), F.end());
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Task &ta = inst.task(a), &tb = inst.task(b);
    return ta.s != tb.s ? ta.s < tb.s : a < b;
  });
  std::vector<i64> load1(inst.m, 0), load2(inst.m, 0);
  std::pair<std::vector<int>, std::vector<int>> out;
  auto fits = [&](const std::vector<i64>& load, const Task& task) {
    for (i64 e = task.s; e < task.t; ++e)
      if (load[e] + task.d > plan.modified_capacity(inst.capacities[e], k)) return false;
    return true;
  };
  for (int id : order) {
    const Task& task = inst.task(id);
    std::vector<i64>* load = nullptr;
    if (fits(load1, task)) {
      load = &load1;
      out.first.push_back(id);
    } else if (fits(load2, task)) {
      load = &load2;
      out.second.push_back(id);
    } else {
      throw std::logic_error("two_partition: task " + std::to_string(id) + " fits in neither half");
    }
    for (i64 e = task.s; e < task.t; ++e) (*load)[e] += task.d;
  }
  std::sort(out.first.begin(), out.first.end());
  std::sort(out.second.begin(), out.second.end());
  return out;
}

std::vector<int> solve_medium(const Instance& inst, const GroupPlan& plan, int k,
                              std::span<const int> medium_ids, const Rational& delta,
                              std::size_t state_budget) {
  if (medium_ids.empty()) return {};
  const std::size_t bound = crossing_bound(plan.ell, delta, medium_ids.size());
  const Solution opt = solve_exact_bounded(inst, medium_ids, inst.capacities, bound, state_budget);
  auto [h1, h2] = two_partition(inst, plan, k, opt.selected);
  return profit_of(inst, h1) >= profit_of(inst, h2) ? h1 : h2;
}

}  // namespace ufpp
