#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "ufpp/framework.hpp"
#include "ufpp/oracle.hpp"
#include "ufpp/tiny_lp.hpp"

using namespace ufpp;
using ufpp::testing::make_instance;

namespace {

i64 uniform_brute(const std::vector<i64>& caps, const std::vector<Interval>& ivs) {
  const auto n = static_cast<std::uint32_t>(ivs.size());
  i64 best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<i64> count(caps.size(), 0);
    i64 w = 0;
    for (std::uint32_t j = 0; j < n; ++j)
      if (mask >> j & 1U) {
        w += ivs[j].w;
        for (i64 e = ivs[j].s; e < ivs[j].t; ++e) ++count[e];
      }
    bool ok = true;
    for (std::size_t e = 0; e < caps.size(); ++e) ok = ok && count[e] <= caps[e];
    if (ok) best = std::max(best, w);
  }
  return best;
}

i64 weight(const std::vector<Interval>& ivs, const std::vector<int>& picks) {
  i64 w = 0;
  for (int p : picks) w += ivs[p].w;
  return w;
}

std::vector<int> all_ids(const Instance& inst) {
  std::vector<int> ids;
  for (const Task& t : inst.tasks) ids.push_back(t.id);
  return ids;
}

// Tasks with d <= b/9 on capacities in [64, 512].
Instance tiny_instance(std::uint64_t seed, int n, i64 m) {
  XorShift64Star rng(seed);
  Instance inst;
  inst.m = m;
  for (i64 e = 0; e < m; ++e) inst.capacities.push_back(rng.uniform(64, 512));
  for (int id = 0; id < n; ++id) {
    Task t;
    t.id = id;
    t.s = rng.uniform(0, m - 1);
    t.t = rng.uniform(t.s + 1, m);
    t.d = rng.uniform(1, ufpp::testing::min_cap(inst, t) / 9);
    t.w = rng.uniform(1, 100);
    inst.tasks.push_back(t);
  }
  return inst;
}

}  // namespace

TEST_CASE("lp_opt small cases") {
  const Instance one = make_instance({1}, {{0, 1, 1, 1}, {0, 1, 1, 1}});
  CHECK(lp_opt(one, all_ids(one), one.capacities).value == 1);
  const Instance two = make_instance({3}, {{0, 1, 2, 1}, {0, 1, 2, 1}});
  const LpValue v = lp_opt(two, all_ids(two), two.capacities);
  CHECK(v.value == mpq_class(3, 2));
  CHECK(v.x[0] + v.x[1] == mpq_class(3, 2));
  CHECK(lp_opt(two, std::vector<int>{}, two.capacities).value == 0);
}

TEST_CASE("lp_opt bounds the integer optimum and scales with capacities") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Instance inst = ufpp::testing::random_mixed(seed, 8, 5, 40, 20);
    const LpValue v = lp_opt(inst, all_ids(inst), inst.capacities);
    CHECK(v.value >= brute_force(inst).profit);
    CHECK(v.value <= profit_of(inst, all_ids(inst)));
    // u' >= (1 - beta) u  =>  lp(u') >= (1 - beta) lp(u)
    std::vector<i64> reduced;
    for (i64 u : inst.capacities) reduced.push_back((u * 3 + 3) / 4);
    CHECK(lp_opt(inst, all_ids(inst), reduced).value >= v.value * mpq_class(3, 4));
  }
}

TEST_CASE("solve_uniform examples") {
  const std::vector<Interval> full{{0, 2, 5}, {0, 2, 3}};
  CHECK(solve_uniform(std::vector<i64>{1, 1}, full) == std::vector<int>{0});
  const std::vector<Interval> unit{{0, 1, 2}, {0, 1, 9}, {0, 1, 4}};
  CHECK(solve_uniform(std::vector<i64>{1}, unit) == std::vector<int>{1});
  CHECK(solve_uniform(std::vector<i64>{0}, unit).empty());
  CHECK(solve_uniform(std::vector<i64>{3}, unit) == std::vector<int>{0, 1, 2});
}

TEST_CASE("solve_uniform agrees with enumeration") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    XorShift64Star rng(seed);
    const i64 m = rng.uniform(1, 6);
    std::vector<i64> caps;
    for (i64 e = 0; e < m; ++e) caps.push_back(rng.uniform(0, 3));
    std::vector<Interval> ivs;
    const int n = static_cast<int>(rng.uniform(0, 12));
    for (int j = 0; j < n; ++j) {
      const i64 s = rng.uniform(0, m - 1);
      ivs.push_back({s, rng.uniform(s + 1, m), rng.uniform(0, 20)});
    }
    const std::vector<int> picks = solve_uniform(caps, ivs);
    std::vector<i64> count(m, 0);
    for (int p : picks)
      for (i64 e = ivs[p].s; e < ivs[p].t; ++e) ++count[e];
    for (i64 e = 0; e < m; ++e) CHECK(count[e] <= caps[e]);
    CHECK(weight(ivs, picks) == uniform_brute(caps, ivs));
  }
}

TEST_CASE("f_delta") {
  const FValue quarter = f_delta(Rational(1, 4));
  CHECK(quarter.lo == 6);
  CHECK(quarter.hi == 6);
  const FValue fast = f_delta(Rational(16, 135));
  CHECK(fast.hi < mpq_class(2503, 1000));
  CHECK(fast.hi - fast.lo <= mpq_class(1, mpz_class(1) << 40));
  const double expect = (1 + std::sqrt(16.0 / 135)) / (1 - std::sqrt(16.0 / 135) - 16.0 / 135);
  CHECK(fast.lo.get_d() == doctest::Approx(expect).epsilon(1e-12));
  CHECK(f_delta(Rational(1, 1'000'000'000)).hi < mpq_class(1001, 1000));
  mpq_class prev = 0;
  for (int a = 1; a <= 390; a += 7) {
    const FValue v = f_delta(Rational(a, 1024));
    CHECK(v.lo >= prev);
    prev = v.lo;
  }
  CHECK(in_f_domain(Rational(16, 135)));
  CHECK(in_f_domain(Rational(38, 100)));
  CHECK_FALSE(in_f_domain(Rational(39, 100)));
  CHECK_THROWS(f_delta(Rational(39, 100)));
  CHECK_THROWS(f_delta(Rational(0)));
}

TEST_CASE("solve_tiny with one demand class is the uniform optimum") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Instance inst = tiny_instance(seed, 10, 5);
    for (Task& t : inst.tasks) t.d = 7;
    const GroupPlan plan = group(inst, 3, 5, Rational(1, 16));
    for (const auto& [k, ids] : plan.groups) {
      const std::vector<int> out = solve_tiny(inst, plan, k, ids, Rational(1, 9));
      const std::vector<i64> caps = modified_capacities(inst, plan, k);
      std::vector<i64> mult;
      for (i64 u : caps) mult.push_back(u / 7);
      std::vector<Interval> ivs;
      for (int id : ids) ivs.push_back({inst.task(id).s, inst.task(id).t, inst.task(id).w});
      CHECK(profit_of(inst, out) == uniform_brute(mult, ivs));
    }
  }
}

TEST_CASE("solve_tiny with beta = 0 and one class") {
  const Instance inst = make_instance({90, 90, 90}, {{0, 2, 9, 4}, {1, 3, 9, 6}, {0, 3, 10, 5}});
  const GroupPlan plan = group(inst, 1, 2, Rational(0));
  REQUIRE(plan.groups.size() == 1);
  const int k = plan.groups.begin()->first;
  const std::vector<int> out = solve_tiny(inst, plan, k, all_ids(inst), Rational(1, 9));
  CHECK(out == std::vector<int>{0, 1, 2});
}

TEST_CASE("solve_tiny is always within the modified capacities") {
  int misses = 0;
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Instance inst = tiny_instance(seed, 12, 6);
    const GroupPlan plan = group(inst, 3, 5, Rational(1, 16));
    for (const auto& [k, ids] : plan.groups) {
      const std::vector<int> out = solve_tiny(inst, plan, k, ids, Rational(1, 9));
      REQUIRE(check_modified(inst, plan, k, out));
      const mpq_class lp = lp_opt(inst, ids, modified_capacities(inst, plan, k)).value;
      if (f_delta(Rational(16, 135)).lo * profit_of(inst, out) < lp) ++misses;
    }
  }
  CHECK(misses == 0);
}

TEST_CASE("solve_tiny preconditions") {
  const Instance inst = make_instance({90}, {{0, 1, 30, 4}});
  const GroupPlan plan = group(inst, 3, 5, Rational(1, 16));
  const int k = plan.groups.begin()->first;
  CHECK_THROWS_AS(solve_tiny(inst, plan, k, all_ids(inst), Rational(1, 9)), std::invalid_argument);
  CHECK_THROWS_AS(solve_tiny(inst, plan, k, std::vector<int>{}, Rational(1, 4)), std::invalid_argument);
  CHECK_THROWS_AS(solve_tiny(inst, plan, k + 100, all_ids(inst), Rational(1, 9)), std::invalid_argument);
  CHECK(solve_tiny(inst, plan, k, std::vector<int>{}, Rational(1, 9)).empty());
}
