#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ufpp/core.hpp"

namespace ufpp {

struct GroupPlan;

inline constexpr std::size_t kDefaultStateBudget = 2'000'000;
inline constexpr std::size_t kUnboundedCrossing = std::numeric_limits<std::size_t>::max();

class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Optimal subset of `ids` under the given per-edge capacities with at most
/// `crossing_bound` selected tasks on any edge. Vertex sweep; the state is
/// the set of selected tasks crossing the current edge. Throws
/// budget_exceeded when more than `state_budget` states are live.
Solution solve_exact_bounded(const Instance& inst, std::span<const int> ids,
                             std::span<const i64> capacities, std::size_t crossing_bound,
                             std::size_t state_budget = kDefaultStateBudget);

/// Greedy split of a feasible set of (1-2 beta)-small tasks of group k into
/// two sets that both respect u_e - beta 2^k.
std::pair<std::vector<int>, std::vector<int>> two_partition(const Instance& inst, const GroupPlan& plan,
                                                            int k, std::span<const int> F);

/// ceil(2^(ell+1) / delta), saturated at `cap`.
std::size_t crossing_bound(int ell, const Rational& delta, std::size_t cap);

/// Exact optimum over the medium tasks, then the heavier half of the
/// two-partition. The result respects the modified capacities of group k.
std::vector<int> solve_medium(const Instance& inst, const GroupPlan& plan, int k,
                              std::span<const int> medium_ids, const Rational& delta,
                              std::size_t state_budget = kDefaultStateBudget);

}  // namespace ufpp
