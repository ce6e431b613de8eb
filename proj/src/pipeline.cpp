#include "ufpp/pipeline.hpp"

#include "ufpp/its.hpp"
#include "ufpp/oracle.hpp"

namespace ufpp {

namespace {

Instance part(const Instance& inst, const Rational& delta, bool small) {
  const Classification cls = classify(inst, delta);
  return restrict_to(inst, small ? cls.small : cls.large);
}

Solution relabel(const Instance& inst, const Solution& sol, const std::string& tag) {
  Solution out = make_solution(inst, sol.selected, tag);
  out.capacity_scale = sol.capacity_scale;
  return out;
}

}  // namespace

Solution solve_main(const Instance& input, const Rational& eps, const FrameworkOptions& options) {
  const Instance inst = deliverable(input);
  const Rational half(1, 2);
  const Solution small = solve_small(part(inst, half, true), eps, half, options);
  const Solution large = solve_large(part(inst, half, false), 2);
  const Solution both[] = {small, large};
  return relabel(input, combine_best(both, inst), "main");
}

Solution solve_fast(const Instance& input, const RepairLog& log) {
  const Instance inst = deliverable(input);
  const Rational ninth(1, 9);
  const Solution small = solve_tiny_framework(part(inst, ninth, true), 3, 5, ninth, log);
  const Solution large = solve_large(part(inst, ninth, false), 9);
  const Solution both[] = {small, large};
  return relabel(input, combine_best(both, inst), "fast");
}

Solution solve(const Instance& inst, const SolveConfig& config) {
  FrameworkOptions options;
  options.ell = config.ell;
  options.q = config.q;
  options.state_budget = config.state_budget;
  options.log = config.log;

  Solution sol;
  const std::string& algo = config.algorithm;
  if (algo == "main") {
    sol = solve_main(inst, config.eps, options);
  } else if (algo == "fast") {
    sol = solve_fast(inst, config.log);
  } else if (algo == "large") {
    const Instance clean = deliverable(inst);
    sol = relabel(inst, solve_large(part(clean, Rational(1, config.k_large), false), config.k_large), "large");
  } else if (algo == "small") {
    const Instance clean = deliverable(inst);
    sol = relabel(inst, solve_small(part(clean, Rational(1) - config.gamma, true), config.eps, config.gamma, options),
                  "small");
  } else if (algo == "ra") {
    sol = solve_ra(inst, config.eps, config.beta_aug, options);
  } else if (algo == "exact") {
    const OracleResult r = exact_sweep(inst, config.state_budget);
    sol = make_solution(inst, r.witness, "exact");
  } else {
    throw std::invalid_argument("unknown algorithm '" + algo + "'");
  }
  const Rational scale = sol.capacity_scale.value_or(Rational(1));
  if (!check_feasible_scaled(inst, sol.selected, scale).feasible)
    throw std::logic_error("solver '" + algo + "' returned an infeasible selection");
  return sol;
}

}  // namespace ufpp
