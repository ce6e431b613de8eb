#pragma once

#include <gmpxx.h>

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ufpp/core.hpp"

namespace ufpp {

struct GroupPlan;

struct LpValue {
  mpq_class value;
  std::vector<mpq_class> x;  // aligned with the ids passed in
};

/// Exact optimum of max sum w_i x_i subject to per-edge load <= capacities[e]
/// and 0 <= x_i <= 1, over the listed tasks.
LpValue lp_opt(const Instance& inst, std::span<const int> ids, std::span<const i64> capacities);

struct Interval {
  i64 s = 0;
  i64 t = 0;
  i64 w = 0;
};

/// Maximum-weight subset of intervals with at most capacities[e] of them on
/// each edge e; returns indices into `intervals`, sorted.
std::vector<int> solve_uniform(std::span<const i64> capacities, std::span<const Interval> intervals);

struct FValue {
  mpq_class lo;
  mpq_class hi;  // lo <= f(delta') <= hi, hi - lo <= 2^-40
};

/// f(d) = (1 + sqrt d) / (1 - sqrt d - d) for 0 < d <= (3 - sqrt 5)/2.
FValue f_delta(const Rational& delta_prime);

/// delta' <= (3 - sqrt 5)/2, decided exactly.
bool in_f_domain(const Rational& delta_prime);

/// Tiny tasks of group k: a set respecting u_e - beta 2^k, built by demand
/// grouping and uniform-demand subproblems. `log` receives repair messages.
std::vector<int> solve_tiny(const Instance& inst, const GroupPlan& plan, int k, std::span<const int> tiny_ids,
                            const Rational& delta, const std::function<void(const std::string&)>& log = {});

/// Modified capacities of group k as a full per-edge vector (edges outside
/// the group keep u_e).
std::vector<i64> modified_capacities(const Instance& inst, const GroupPlan& plan, int k);

}  // namespace ufpp
