#pragma once

#include <cstdint>
#include <vector>

#include "ufpp/core.hpp"
#include "ufpp/random.hpp"

namespace ufpp::testing {

// Path of length 5 with capacities 2k^2, 2k^2+2k, 2(2k^2+2k), 2k^2+2k, 2k^2:
// k-1 tasks (0,3) and k-1 tasks (2,5) of demand 2k+1, plus (1,3) and (2,4)
// of demand 2k+3.
inline Instance tight_instance(int k, std::vector<i64> profits = {}) {
  const i64 a = 2 * i64{k} * k, b = a + 2 * k;
  Instance inst;
  inst.m = 5;
  inst.capacities = {a, b, 2 * b, b, a};
  auto add = [&](i64 s, i64 t, i64 d) {
    const int id = static_cast<int>(inst.tasks.size());
    const i64 w = id < static_cast<int>(profits.size()) ? profits[id] : 1;
    inst.tasks.push_back(Task{s, t, d, w, id});
  };
  for (int j = 0; j < k - 1; ++j) add(0, 3, 2 * k + 1);
  for (int j = 0; j < k - 1; ++j) add(2, 5, 2 * k + 1);
  add(1, 3, 2 * k + 3);
  add(2, 4, 2 * k + 3);
  return inst;
}

inline Instance make_instance(std::vector<i64> caps, std::vector<std::vector<i64>> tasks) {
  Instance inst;
  inst.m = static_cast<i64>(caps.size());
  inst.capacities = std::move(caps);
  for (const auto& t : tasks)
    inst.tasks.push_back(Task{t[0], t[1], t[2], t[3], static_cast<int>(inst.tasks.size())});
  return inst;
}

// Loads recomputed from scratch, independent of the library checker.
inline bool naive_feasible(const Instance& inst, std::uint32_t mask) {
  std::vector<i64> load(inst.capacities.size(), 0);
  for (std::size_t j = 0; j < inst.tasks.size(); ++j) {
    if (!(mask >> j & 1U)) continue;
    const Task& t = inst.tasks[j];
    for (i64 e = t.s; e < t.t; ++e) load[e] += t.d;
  }
  for (std::size_t e = 0; e < load.size(); ++e)
    if (load[e] > inst.capacities[e]) return false;
  return true;
}

inline std::vector<int> ids_of_mask(const Instance& inst, std::uint32_t mask) {
  std::vector<int> ids;
  for (std::size_t j = 0; j < inst.tasks.size(); ++j)
    if (mask >> j & 1U) ids.push_back(inst.tasks[j].id);
  return ids;
}

// Subset-enumeration optimum written against naive_feasible.
inline i64 naive_opt(const Instance& inst) {
  const std::uint32_t n = static_cast<std::uint32_t>(inst.tasks.size());
  i64 best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (!naive_feasible(inst, mask)) continue;
    i64 w = 0;
    for (std::uint32_t j = 0; j < n; ++j)
      if (mask >> j & 1U) w += inst.tasks[j].w;
    best = std::max(best, w);
  }
  return best;
}

inline i64 min_cap(const Instance& inst, const Task& t) {
  i64 b = inst.capacities[t.s];
  for (i64 e = t.s; e < t.t; ++e) b = std::min(b, inst.capacities[e]);
  return b;
}

// Random instance whose tasks are all 1/k-large: d drawn from (b/k, b].
inline Instance random_large(std::uint64_t seed, int n, i64 m, i64 maxcap, int k) {
  XorShift64Star rng(seed);
  Instance inst;
  inst.m = m;
  for (i64 e = 0; e < m; ++e) inst.capacities.push_back(rng.uniform(1, maxcap));
  for (int id = 0; id < n; ++id) {
    Task t;
    t.id = id;
    t.s = rng.uniform(0, m - 1);
    t.t = rng.uniform(t.s + 1, std::min(m, t.s + 1 + rng.uniform(0, m)));
    const i64 b = min_cap(inst, t);
    t.d = rng.uniform(b / k + 1, b);
    t.w = rng.uniform(1, 100);
    inst.tasks.push_back(t);
  }
  return inst;
}

inline Instance random_mixed(std::uint64_t seed, int n, i64 m, i64 maxcap, i64 maxdemand) {
  RandomParams p;
  p.n = n;
  p.m = m;
  p.maxcap = maxcap;
  p.maxdemand = maxdemand;
  p.profit_style = seed % 3 == 0 ? "proportional" : "uniform";
  return gen_random(p, seed);
}

}  // namespace ufpp::testing
