#include <doctest.h>

#include "support.hpp"
#include "ufpp/its.hpp"
#include "ufpp/oracle.hpp"

using namespace ufpp;
using ufpp::testing::make_instance;
using ufpp::testing::tight_instance;

TEST_CASE("brute_force examples") {
  CHECK(brute_force(tight_instance(2)).profit == 4);
  CHECK(brute_force(make_instance({3}, {})).profit == 0);
  const OracleResult knap = brute_force(make_instance({10}, {{0, 1, 6, 6}, {0, 1, 5, 5}, {0, 1, 4, 4}}));
  // 6 + 4 fills the edge exactly
  CHECK(knap.profit == 10);
  CHECK(knap.witness == std::vector<int>{0, 2});
  CHECK(knap.method == "subset_brute");
}

TEST_CASE("brute_force ties go to the smallest witness") {
  const OracleResult r = brute_force(make_instance({1}, {{0, 1, 1, 3}, {0, 1, 1, 3}}));
  CHECK(r.witness == std::vector<int>{0});
}

TEST_CASE("oracle caps") {
  Instance inst = make_instance({100}, {});
  for (int j = 0; j < 25; ++j) inst.tasks.push_back(Task{0, 1, 1, 1, j});
  CHECK_THROWS_AS(brute_force(inst), oracle_limit);
  CHECK_THROWS_AS(max_its_brute(inst), oracle_limit);
  CHECK(brute_force(inst, 25).profit == 25);
}

TEST_CASE("exact_sweep examples") {
  const Instance chain = make_instance({1, 1, 1}, {{0, 1, 1, 2}, {1, 2, 1, 3}, {2, 3, 1, 4}});
  const OracleResult c = exact_sweep(chain);
  CHECK(c.profit == 9);
  CHECK(c.method == "sweep_dp");
  const Instance knap = make_instance({10}, {{0, 1, 6, 6}, {0, 1, 5, 5}, {0, 1, 4, 4}});
  CHECK(exact_sweep(knap).profit == 10);
}

TEST_CASE("exact_sweep and brute_force agree") {
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    const int n = static_cast<int>(seed % 15);
    const Instance inst = ufpp::testing::random_mixed(seed, n, 1 + static_cast<i64>(seed % 8), 16, 12);
    const OracleResult a = brute_force(inst), b = exact_sweep(inst);
    CAPTURE(seed);
    REQUIRE(a.profit == b.profit);
    CHECK(a.profit == ufpp::testing::naive_opt(inst));
    CHECK(check_feasible(inst, b.witness).feasible);
    CHECK(profit_of(inst, b.witness) == b.profit);
  }
}

TEST_CASE("max_its_brute") {
  const OracleResult t = max_its_brute(tight_instance(2, {4, 3, 2, 1}));
  CHECK(t.profit == 4);
  CHECK(t.method == "its_brute");
  const Instance apart = make_instance({5, 5, 5}, {{0, 1, 2, 1}, {1, 2, 2, 1}, {2, 3, 2, 1}});
  CHECK(max_its_brute(apart).witness == std::vector<int>{0, 1, 2});
}

TEST_CASE("ITS optimum vs UFPP optimum") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const int k = 2 + static_cast<int>(seed % 3);
    const Instance large = ufpp::testing::random_large(seed, 10, 6, 40, k);
    const i64 its = max_its_brute(large).profit, opt = brute_force(large).profit;
    CHECK(its <= opt);
    CHECK(opt <= 2 * k * its);
  }
}
