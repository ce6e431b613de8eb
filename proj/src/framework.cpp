#include "ufpp/framework.hpp"

#include <algorithm>
#include <bit>

#include "ufpp/tiny_lp.hpp"

namespace ufpp {

std::vector<int> GroupPlan::eta(int c) const {
  std::vector<int> ks;
  const int p = period();
  for (const auto& [k, ids] : groups)
    if (((k % p) + p) % p == c) ks.push_back(k);
  return ks;
}

i64 GroupPlan::modified_capacity(i64 u, int k) const {
  if (beta == Rational(0)) return u;
  return checked_sub(u, (beta * Rational::power_of_two(k)).ceil());
}

std::vector<i64> GroupPlan::group_edges(const Instance& inst, int k) const {
  std::vector<i64> edges;
  auto it = groups.find(k);
  if (it == groups.end()) return edges;
  std::vector<int> cover(inst.m + 1, 0);
  for (int id : it->second) {
    const Task& task = inst.task(id);
    ++cover[task.s];
    --cover[task.t];
  }
  int running = 0;
  for (i64 e = 0; e < inst.m; ++e) {
    running += cover[e];
    if (running > 0) edges.push_back(e);
  }
  return edges;
}

GroupPlan group(const Instance& inst, int ell, int q, const Rational& beta) {
  if (ell < 1 || ell > 61) throw std::invalid_argument("group: ell must be in 1..61");
  if (q < 1) throw std::invalid_argument("group: q must be >= 1");
  GroupPlan plan;
  plan.ell = ell;
  plan.q = q;
  plan.beta = beta;
  for (const Task& task : inst.tasks) {
    const i64 b = bottleneck(inst, task).b;
    const int top = 63 - std::countl_zero(static_cast<std::uint64_t>(b));  // floor(log2 b)
    for (int k = top - ell + 1; k <= top; ++k) plan.groups[k].push_back(task.id);
  }
  for (auto& [k, ids] : plan.groups) std::sort(ids.begin(), ids.end());
  return plan;
}

bool check_modified(const Instance& inst, const GroupPlan& plan, int k, std::span<const int> selected) {
  auto it = plan.groups.find(k);
  for (int id : selected)
    if (it == plan.groups.end() || !std::binary_search(it->second.begin(), it->second.end(), id))
      throw std::invalid_argument("check_modified: task " + std::to_string(id) + " is not in group " +
                                  std::to_string(k));
  const auto load = edge_loads(inst, selected);
  for (i64 e : plan.group_edges(inst, k))
    if (load[e] > plan.modified_capacity(inst.capacities[e], k)) return false;
  return true;
}

Solution combine_offsets(const Instance& inst, const GroupPlan& plan,
                         const std::map<int, std::vector<int>>& per_k, const Rational& scale,
                         std::vector<i64>* profits) {
  for (const auto& [k, ids] : per_k)
    if (!check_modified(inst, plan, k, ids))
      throw std::logic_error("combine_offsets: group " + std::to_string(k) +
                             " violates its modified capacity constraint");
  std::vector<int> best;
  i64 best_profit = -1;
  if (profits) profits->clear();
  for (int c = 0; c < plan.period(); ++c) {
    std::vector<int> alg;
    for (int k : plan.eta(c)) {
      auto it = per_k.find(k);
      if (it != per_k.end()) alg.insert(alg.end(), it->second.begin(), it->second.end());
    }
    std::sort(alg.begin(), alg.end());
    alg.erase(std::unique(alg.begin(), alg.end()), alg.end());
    const i64 w = profit_of(inst, alg);
    if (profits) profits->push_back(w);
    if (w > best_profit) {
      best_profit = w;
      best = std::move(alg);
    }
  }
  if (!check_feasible_scaled(inst, best, scale).feasible)
    throw std::logic_error("combine_offsets: combined solution is infeasible");
  return make_solution(inst, std::move(best), "framework");
}

namespace {

// Largest a/den (den a power of two, starting at 1024) in the domain of f
// with f(a/den) <= bound.
Rational largest_delta_prime(const Rational& bound) {
  for (int bits = 10; bits <= 60; bits += 10) {
    const i64 den = pow2(bits);
    auto ok = [&](i64 a) {
      const Rational d(a, den);
      return in_f_domain(d) && f_delta(d).hi <= mpq_class(mpz_class(std::to_string(bound.num())),
                                                          mpz_class(std::to_string(bound.den())));
    };
    if (!ok(1)) continue;
    i64 lo = 1, hi = den;  // ok(lo), !ok(hi) since 1 is outside the domain
    while (hi - lo > 1) {
      const i64 mid = lo + (hi - lo) / 2;
      (ok(mid) ? lo : hi) = mid;
    }
    return Rational(lo, den);
  }
  throw std::invalid_argument("no delta' satisfies f(delta') <= " + bound.str());
}

int ceil_div(const Rational& a, const Rational& b) {
  const Rational r = a / b;
  const i64 v = r.ceil();
  if (v > 61) throw std::invalid_argument("eps too small: window width exceeds 61");
  return static_cast<int>(std::max<i64>(v, 1));
}

void require_small(const Instance& inst, const Rational& gamma) {
  const Rational limit = Rational(1) - gamma;
  for (const Task& task : inst.tasks) {
    const TaskMeta meta = bottleneck(inst, task);
    if (meta.slack >= 0 && !leq_scaled(task.d, limit, meta.b))
      throw std::invalid_argument("solve_small: task " + std::to_string(task.id) + " is not (1-gamma)-small");
  }
}

}  // namespace

SmallParams choose_small_params(const Rational& eps, const Rational& gamma) {
  if (eps <= Rational(0) || gamma <= Rational(0) || gamma > Rational(1))
    throw std::invalid_argument("choose_small_params: need eps > 0 and 0 < gamma <= 1");
  SmallParams p;
  p.eps_prime = eps / Rational(8);
  for (int attempt = 0; attempt < 20; ++attempt, p.eps_prime = p.eps_prime / Rational(2)) {
    const Rational one = Rational(1);
    p.q = 2;
    for (;; ++p.q) {
      if (p.q > 62) throw std::invalid_argument("choose_small_params: no admissible q");
      p.beta = Rational::power_of_two(1 - p.q);
      if (one / (one - p.beta) <= one + p.eps_prime && Rational(2) * p.beta <= gamma) break;
    }
    p.ell = ceil_div(Rational(p.q), p.eps_prime);
    const Rational ratio = (Rational(2) + (one + p.eps_prime) / (one - p.beta)) * Rational(p.ell + p.q, p.ell);
    if (!(ratio <= Rational(3) + eps)) continue;
    p.delta_prime = largest_delta_prime(one + p.eps_prime);
    p.delta = std::min((one - p.beta) * p.delta_prime, (one - p.beta) / Rational::power_of_two(p.ell));
    return p;
  }
  throw std::logic_error("choose_small_params: parameter selection failed");
}

RaParams choose_ra_params(const Rational& eps, const Rational& beta_aug) {
  if (eps <= Rational(0) || beta_aug <= Rational(0))
    throw std::invalid_argument("choose_ra_params: need eps > 0 and beta_aug > 0");
  RaParams p;
  p.q = 2;
  while (Rational::power_of_two(2 - p.q) > beta_aug) {
    if (++p.q > 62) throw std::invalid_argument("choose_ra_params: beta_aug too small");
  }
  p.eps_prime = eps / Rational(4);
  // smallest ell with (ell+q)(2+eps') <= ell(2+eps)
  p.ell = ceil_div(Rational(p.q) * (Rational(2) + p.eps_prime), eps - p.eps_prime);
  p.delta_prime = largest_delta_prime(Rational(1) + p.eps_prime);
  p.delta = std::min(p.delta_prime, Rational(1) / Rational::power_of_two(p.ell));
  p.capacity_scale = Rational(1) + Rational::power_of_two(2 - p.q);
  return p;
}

Solution solve_small(const Instance& input, const Rational& eps, const Rational& gamma,
                     const FrameworkOptions& options) {
  require_small(input, gamma);
  SmallParams p = choose_small_params(eps, gamma);
  if (options.ell) p.ell = *options.ell;
  if (options.q) {
    p.q = *options.q;
    p.beta = Rational::power_of_two(1 - p.q);
    if (Rational(2) * p.beta > gamma) throw std::invalid_argument("solve_small: q too small for gamma");
  }
  if (options.ell || options.q)
    p.delta = std::min((Rational(1) - p.beta) * p.delta_prime,
                       (Rational(1) - p.beta) / Rational::power_of_two(p.ell));

  const Instance inst = deliverable(input);
  const GroupPlan plan = group(inst, p.ell, p.q, p.beta);
  std::map<int, std::vector<int>> per_k;
  for (const auto& [k, ids] : plan.groups) {
    std::vector<int> tiny, medium;
    for (int id : ids) {
      const Task& task = inst.task(id);
      (leq_scaled(task.d, p.delta, bottleneck(inst, task).b) ? tiny : medium).push_back(id);
    }
    std::vector<int> a = solve_tiny(inst, plan, k, tiny, p.delta, options.log);
    std::vector<int> b = solve_medium(inst, plan, k, medium, p.delta, options.state_budget);
    per_k[k] = profit_of(inst, b) > profit_of(inst, a) ? b : a;
  }
  Solution sol = combine_offsets(inst, plan, per_k);
  return make_solution(input, sol.selected, "small");
}

Solution solve_ra(const Instance& input, const Rational& eps, const Rational& beta_aug,
                  const FrameworkOptions& options) {
  RaParams p = choose_ra_params(eps, beta_aug);
  if (options.ell) p.ell = *options.ell;
  if (options.q) p.q = *options.q;
  if (options.ell || options.q) {
    p.delta = std::min(p.delta_prime, Rational(1) / Rational::power_of_two(p.ell));
    p.capacity_scale = Rational(1) + Rational::power_of_two(2 - p.q);
  }

  const Instance inst = deliverable(input);
  const GroupPlan plan = group(inst, p.ell, p.q, Rational(0));
  std::map<int, std::vector<int>> per_k;
  for (const auto& [k, ids] : plan.groups) {
    std::vector<int> tiny, large;
    for (int id : ids) {
      const Task& task = inst.task(id);
      (leq_scaled(task.d, p.delta, bottleneck(inst, task).b) ? tiny : large).push_back(id);
    }
    std::vector<int> a = solve_tiny(inst, plan, k, tiny, p.delta, options.log);
    std::vector<int> b;
    if (!large.empty()) {
      const std::size_t bound = crossing_bound(p.ell, p.delta, large.size());
      b = solve_exact_bounded(inst, large, inst.capacities, bound, options.state_budget).selected;
    }
    per_k[k] = profit_of(inst, b) > profit_of(inst, a) ? b : a;
  }
  Solution sol = combine_offsets(inst, plan, per_k, p.capacity_scale);
  Solution out = make_solution(input, sol.selected, "ra");
  out.capacity_scale = p.capacity_scale;
  return out;
}

Solution solve_tiny_framework(const Instance& input, int ell, int q, const Rational& delta, const RepairLog& log) {
  const Instance inst = deliverable(input);
  const GroupPlan plan = group(inst, ell, q, Rational::power_of_two(1 - q));
  std::map<int, std::vector<int>> per_k;
  for (const auto& [k, ids] : plan.groups) per_k[k] = solve_tiny(inst, plan, k, ids, delta, log);
  Solution sol = combine_offsets(inst, plan, per_k);
  return make_solution(input, sol.selected, "tiny");
}

}  // namespace ufpp
