#pragma once

#include <optional>
#include <string>

#include "ufpp/core.hpp"
#include "ufpp/framework.hpp"

namespace ufpp {

struct SolveConfig {
  std::string algorithm = "main";  // main, fast, large, small, ra, exact
  Rational eps = Rational(1);
  Rational gamma = Rational(1, 2);
  int k_large = 2;
  Rational beta_aug = Rational(1, 2);
  std::optional<int> ell;
  std::optional<int> q;
  std::size_t state_budget = kDefaultStateBudget;
  RepairLog log;
};

/// 1/2-small part through solve_small, 1/2-large part through solve_large(2).
Solution solve_main(const Instance& inst, const Rational& eps, const FrameworkOptions& options = {});

/// 1/9-large part through solve_large(9); 1/9-small part through the
/// tiny-task framework with ell = 3, q = 5, delta = 1/9.
Solution solve_fast(const Instance& inst, const RepairLog& log = {});

/// Dispatch by config.algorithm. "large" solves the 1/k-large part and
/// "small" the (1-gamma)-small part of the instance. Every result is checked
/// for feasibility (against inflated capacities for "ra").
Solution solve(const Instance& inst, const SolveConfig& config);

}  // namespace ufpp
