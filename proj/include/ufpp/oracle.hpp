#pragma once

#include <string>
#include <vector>

#include "ufpp/core.hpp"
#include "ufpp/medium_dp.hpp"

namespace ufpp {

inline constexpr int kDefaultOracleCap = 24;

struct OracleResult {
  i64 profit = 0;
  std::vector<int> witness;  // sorted ids
  std::string method;        // subset_brute, sweep_dp, its_brute
};

class oracle_limit : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Exhaustive search over subsets. Ties resolve to the lexicographically
/// smallest witness. Throws oracle_limit when n > cap.
OracleResult brute_force(const Instance& inst, int cap = kDefaultOracleCap);

/// Sweep DP with unbounded crossing; throws budget_exceeded.
OracleResult exact_sweep(const Instance& inst, std::size_t state_budget = kDefaultStateBudget);

/// Exhaustive search over pairwise-compatible sets of deliverable tasks.
OracleResult max_its_brute(const Instance& inst, int cap = kDefaultOracleCap);

}  // namespace ufpp
