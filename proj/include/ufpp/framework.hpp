#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ufpp/core.hpp"
#include "ufpp/medium_dp.hpp"

namespace ufpp {

// Tasks grouped by bottleneck range: group k holds {i : 2^k <= b(i) < 2^(k+ell)}.
// k may be negative (b(i) = 1 lies in groups 1-ell..0).
struct GroupPlan {
  int ell = 1;
  int q = 1;
  Rational beta;  // 2^(1-q), or 0 for resource augmentation
  std::map<int, std::vector<int>> groups;

  int period() const { return ell + q; }
  /// Occupied k with k = c (mod ell+q).
  std::vector<int> eta(int c) const;
  /// floor(u - beta 2^k): the largest integer load allowed on an edge of group k.
  i64 modified_capacity(i64 u, int k) const;
  /// Edges used by some task of group k.
  std::vector<i64> group_edges(const Instance& inst, int k) const;
};

GroupPlan group(const Instance& inst, int ell, int q, const Rational& beta);

/// Load of `selected` within u_e - beta 2^k on every edge used by group k.
bool check_modified(const Instance& inst, const GroupPlan& plan, int k, std::span<const int> selected);

/// Best ALG(c) = union of per_k[k] over k in eta(c); smallest c on ties.
/// `scale` is the capacity factor the union must respect (1 unless
/// resource augmented). When `profits` is given it receives w(ALG(c)) per c.
Solution combine_offsets(const Instance& inst, const GroupPlan& plan,
                         const std::map<int, std::vector<int>>& per_k, const Rational& scale = Rational(1),
                         std::vector<i64>* profits = nullptr);

struct SmallParams {
  Rational eps_prime;
  int q = 2;
  Rational beta;
  int ell = 1;
  Rational delta_prime;
  Rational delta;
};

/// Parameters for the (1-gamma)-small solver with target 3+eps.
SmallParams choose_small_params(const Rational& eps, const Rational& gamma);

struct RaParams {
  Rational eps_prime;
  int q = 2;
  int ell = 1;
  Rational delta_prime;
  Rational delta;
  Rational capacity_scale;  // 1 + 2^(2-q)
};

RaParams choose_ra_params(const Rational& eps, const Rational& beta_aug);

using RepairLog = std::function<void(const std::string&)>;

struct FrameworkOptions {
  std::optional<int> ell;  // overrides
  std::optional<int> q;
  std::size_t state_budget = kDefaultStateBudget;
  RepairLog log;
};

Solution solve_small(const Instance& inst, const Rational& eps, const Rational& gamma,
                     const FrameworkOptions& options = {});

Solution solve_ra(const Instance& inst, const Rational& eps, const Rational& beta_aug,
                  const FrameworkOptions& options = {});

/// Tiny-only framework run with fixed parameters (used by the fast variant).
Solution solve_tiny_framework(const Instance& inst, int ell, int q, const Rational& delta,
                              const RepairLog& log = {});

}  // namespace ufpp
