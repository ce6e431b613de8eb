#include "ufpp/tiny_lp.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

#include "ufpp/framework.hpp"

namespace ufpp {

namespace {

mpq_class to_mpq(const Rational& r) {
  mpq_class q(mpz_class(std::to_string(r.num())), mpz_class(std::to_string(r.den())));
  q.canonicalize();
  return q;
}

mpz_class to_mpz(i64 v) { return mpz_class(std::to_string(v)); }

// Dense simplex for max c.x s.t. A x <= b, x >= 0 with b >= 0, Bland's rule.
class Simplex {
 public:
  Simplex(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b, std::vector<mpq_class> c)
      : rows_(a.size()), vars_(c.size()) {
    const std::size_t cols = vars_ + rows_;
    tab_.assign(rows_, std::vector<mpq_class>(cols));
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < vars_; ++j) tab_[i][j] = a[i][j];
      tab_[i][vars_ + i] = 1;
      basis_.push_back(vars_ + i);
    }
    rhs_ = std::move(b);
    obj_.assign(cols, 0);
    for (std::size_t j = 0; j < vars_; ++j) obj_[j] = c[j];
  }

  void solve() {
    const std::size_t cols = vars_ + rows_;
    for (;;) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(obj_[j]) > 0) {
          enter = j;
          break;
        }
      if (enter == cols) return;
      std::size_t leave = rows_;
      mpq_class best_ratio;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(tab_[i][enter]) <= 0) continue;
        mpq_class ratio = rhs_[i] / tab_[i][enter];
        if (leave == rows_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave == rows_) throw std::logic_error("simplex: unbounded relaxation");
      pivot(leave, enter);
    }
  }

  mpq_class value() const { return value_; }
  std::vector<mpq_class> primal() const {
    std::vector<mpq_class> x(vars_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < vars_) x[basis_[i]] = rhs_[i];
    return x;
  }

 private:
  void pivot(std::size_t r, std::size_t e) {
    const std::size_t cols = vars_ + rows_;
    const mpq_class p = tab_[r][e];
    for (std::size_t j = 0; j < cols; ++j) tab_[r][j] /= p;
    rhs_[r] /= p;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sgn(tab_[i][e]) == 0) continue;
      const mpq_class f = tab_[i][e];
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(tab_[r][j]) != 0) tab_[i][j] -= f * tab_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    if (sgn(obj_[e]) != 0) {
      const mpq_class f = obj_[e];
      for (std::size_t j = 0; j < cols; ++j)
        if (sgn(tab_[r][j]) != 0) obj_[j] -= f * tab_[r][j];
      value_ += f * rhs_[r];
    }
    basis_[r] = e;
  }

  std::size_t rows_;
  std::size_t vars_;
  std::vector<std::vector<mpq_class>> tab_;
  std::vector<mpq_class> rhs_;
  std::vector<mpq_class> obj_;
  std::vector<std::size_t> basis_;
  mpq_class value_ = 0;
};

}  // namespace

LpValue lp_opt(const Instance& inst, std::span<const int> ids, std::span<const i64> capacities) {
  LpValue out;
  const std::size_t n = ids.size();
  out.x.assign(n, 0);
  if (n == 0) return out;

  // One row per distinct set of covering tasks, keeping the tightest
  // capacity; rows that can never bind are dropped.
  std::map<std::vector<int>, i64> rows;
  for (i64 e = 0; e < inst.m; ++e) {
    std::vector<int> users;
    i64 total = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const Task& task = inst.task(ids[j]);
      if (task.uses(e)) {
        users.push_back(static_cast<int>(j));
        total = checked_add(total, task.d);
      }
    }
    if (users.empty()) continue;
    if (capacities[e] < 0) throw std::invalid_argument("lp_opt: negative capacity on a used edge");
    if (total <= capacities[e]) continue;
    auto [it, fresh] = rows.emplace(users, capacities[e]);
    if (!fresh) it->second = std::min(it->second, capacities[e]);
  }

  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> b;
  for (const auto& [users, cap] : rows) {
    std::vector<mpq_class> row(n, 0);
    for (int j : users) row[j] = to_mpz(inst.task(ids[j]).d);
    a.push_back(std::move(row));
    b.push_back(to_mpz(cap));
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<mpq_class> row(n, 0);
    row[j] = 1;
    a.push_back(std::move(row));
    b.push_back(1);
  }
  std::vector<mpq_class> c(n);
  for (std::size_t j = 0; j < n; ++j) c[j] = to_mpz(inst.task(ids[j]).w);

  Simplex lp(std::move(a), std::move(b), std::move(c));
  lp.solve();
  out.value = lp.value();
  out.x = lp.primal();
  return out;
}

std::vector<int> solve_uniform(std::span<const i64> capacities, std::span<const Interval> intervals) {
  const i64 m = static_cast<i64>(capacities.size());
  const int n = static_cast<int>(intervals.size());
  if (n == 0) return {};
  for (const Interval& iv : intervals)
    if (iv.s < 0 || iv.t > m || iv.s >= iv.t || iv.w < 0)
      throw std::invalid_argument("solve_uniform: malformed interval");

  // Every interval is first taken (its backward arc t->s saturated); the
  // residual problem routes each unit back from s to t either along the path
  // (capacity c_e, cost 0) or through the interval's rejection arc (cost w).
  struct Arc {
    int to;
    i64 cap;
    i64 cost;
  };
  const int source = static_cast<int>(m) + 1, sink = static_cast<int>(m) + 2;
  const int nodes = static_cast<int>(m) + 3;
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(nodes);
  auto add = [&](int from, int to, i64 cap, i64 cost) {
    out[from].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({to, cap, cost});
    out[to].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({from, 0, -cost});
    return static_cast<int>(arcs.size()) - 2;
  };
  for (i64 v = 0; v < m; ++v) add(static_cast<int>(v), static_cast<int>(v) + 1, std::max<i64>(capacities[v], 0), 0);
  std::vector<i64> starts(m + 1, 0), ends(m + 1, 0);
  std::vector<int> reject(n);
  for (int i = 0; i < n; ++i) {
    ++starts[intervals[i].s];
    ++ends[intervals[i].t];
    reject[i] = add(static_cast<int>(intervals[i].s), static_cast<int>(intervals[i].t), 1, intervals[i].w);
  }
  for (i64 v = 0; v <= m; ++v) {
    if (starts[v]) add(source, static_cast<int>(v), starts[v], 0);
    if (ends[v]) add(static_cast<int>(v), sink, ends[v], 0);
  }

  // Successive shortest paths; all original costs are non-negative, so zero
  // potentials are valid to start with.
  constexpr i64 inf = std::numeric_limits<i64>::max() / 4;
  std::vector<i64> potential(nodes, 0), dist(nodes);
  std::vector<int> via(nodes);
  i64 remaining = n;
  while (remaining > 0) {
    std::fill(dist.begin(), dist.end(), inf);
    std::fill(via.begin(), via.end(), -1);
    using Item = std::pair<i64, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[source] = 0;
    heap.push({0, source});
    while (!heap.empty()) {
      auto [d, u] = heap.top();
      heap.pop();
      if (d != dist[u]) continue;
      for (int a : out[u]) {
        const Arc& arc = arcs[a];
        if (arc.cap <= 0) continue;
        const i64 nd = d + arc.cost + potential[u] - potential[arc.to];
        if (nd < dist[arc.to]) {
          dist[arc.to] = nd;
          via[arc.to] = a;
          heap.push({nd, arc.to});
        }
      }
    }
    if (dist[sink] >= inf) throw std::logic_error("solve_uniform: sink unreachable");
    for (int v = 0; v < nodes; ++v)
      if (dist[v] < inf) potential[v] += dist[v];
    i64 push = remaining;
    for (int v = sink; v != source; v = arcs[via[v] ^ 1].to) push = std::min(push, arcs[via[v]].cap);
    for (int v = sink; v != source; v = arcs[via[v] ^ 1].to) {
      arcs[via[v]].cap -= push;
      arcs[via[v] ^ 1].cap += push;
    }
    remaining -= push;
  }

  std::vector<int> chosen;
  for (int i = 0; i < n; ++i)
    if (arcs[reject[i]].cap == 1) chosen.push_back(i);
  return chosen;
}

bool in_f_domain(const Rational& delta_prime) {
  const mpq_class d = to_mpq(delta_prime);
  const mpq_class gap = 3 - 2 * d;
  return sgn(gap) >= 0 && gap * gap >= 5;
}

FValue f_delta(const Rational& delta_prime) {
  if (delta_prime <= Rational(0) || !in_f_domain(delta_prime))
    throw std::domain_error("f_delta: argument outside (0, (3 - sqrt 5)/2]");
  const mpz_class num = to_mpz(delta_prime.num()), den = to_mpz(delta_prime.den());
  // sqrt(num/den) = sqrt(num*den)/den
  const mpz_class radicand = num * den;
  const mpq_class tolerance(mpz_class(1), mpz_class(1) << 40);
  auto f = [](const mpq_class& r) -> mpq_class {
    const mpq_class denom = 1 - r - r * r;
    if (sgn(denom) <= 0) return mpq_class(-1);
    return (1 + r) / denom;
  };
  for (unsigned bits = 64;; bits *= 2) {
    const mpz_class scaled = radicand << (2 * bits);
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    const mpz_class scale = den << bits;
    mpq_class lo_r(root, scale), hi_r(root + (root * root == scaled ? 0 : 1), scale);
    lo_r.canonicalize();
    hi_r.canonicalize();
    FValue v{f(lo_r), f(hi_r)};
    if (sgn(v.hi) > 0 && v.hi - v.lo <= tolerance) return v;
    if (bits > 4096) throw std::logic_error("f_delta: no convergence");
  }
}

std::vector<i64> modified_capacities(const Instance& inst, const GroupPlan& plan, int k) {
  std::vector<i64> caps = inst.capacities;
  for (i64 e : plan.group_edges(inst, k)) caps[e] = plan.modified_capacity(inst.capacities[e], k);
  return caps;
}

std::vector<int> solve_tiny(const Instance& inst, const GroupPlan& plan, int k, std::span<const int> tiny_ids,
                            const Rational& delta, const std::function<void(const std::string&)>& log) {
  const Rational one_minus_beta = Rational(1) - plan.beta;
  if (!(delta <= one_minus_beta / Rational::power_of_two(plan.ell)))
    throw std::invalid_argument("solve_tiny: delta exceeds (1-beta)/2^ell");
  const Rational delta_prime = delta / one_minus_beta;
  if (!in_f_domain(delta_prime)) throw std::invalid_argument("solve_tiny: delta' outside the domain of f");
  auto git = plan.groups.find(k);
  for (int id : tiny_ids) {
    if (git == plan.groups.end() || !std::binary_search(git->second.begin(), git->second.end(), id))
      throw std::invalid_argument("solve_tiny: task " + std::to_string(id) + " is not in group " +
                                  std::to_string(k));
    const Task& task = inst.task(id);
    if (!leq_scaled(task.d, delta, bottleneck(inst, task).b))
      throw std::invalid_argument("solve_tiny: task " + std::to_string(id) + " is not delta-small");
  }
  if (tiny_ids.empty()) return {};

  const std::vector<i64> caps = modified_capacities(inst, plan, k);
  std::vector<int> ids(tiny_ids.begin(), tiny_ids.end());
  const LpValue lp = lp_opt(inst, ids, caps);

  // Demand classes: maximal runs (in demand order) within a factor 1 + sqrt(delta').
  std::vector<std::size_t> order(ids.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const i64 da = inst.task(ids[a]).d, db = inst.task(ids[b]).d;
    return da != db ? da < db : ids[a] < ids[b];
  });
  const mpz_class dp_num = to_mpz(delta_prime.num()), dp_den = to_mpz(delta_prime.den());
  std::vector<std::vector<std::size_t>> classes;
  i64 base = 0;
  for (std::size_t j : order) {
    const i64 d = inst.task(ids[j]).d;
    const mpz_class gap = to_mpz(d - base);
    if (classes.empty() || gap * gap * dp_den > to_mpz(base) * to_mpz(base) * dp_num) {
      classes.emplace_back();
      base = d;
    }
    classes.back().push_back(j);
  }

  // LP mass per class and edge decides each class's share of u'_e.
  const std::size_t G = classes.size();
  std::vector<std::vector<mpq_class>> mass(G, std::vector<mpq_class>(inst.m, 0));
  std::vector<std::vector<bool>> present(G, std::vector<bool>(inst.m, false));
  for (std::size_t g = 0; g < G; ++g)
    for (std::size_t j : classes[g]) {
      const Task& task = inst.task(ids[j]);
      for (i64 e = task.s; e < task.t; ++e) {
        mass[g][e] += lp.x[j] * to_mpz(task.d);
        present[g][e] = true;
      }
    }

  std::vector<int> chosen;
  for (std::size_t g = 0; g < G; ++g) {
    i64 top = 0;
    for (std::size_t j : classes[g]) top = std::max(top, inst.task(ids[j]).d);
    std::vector<i64> mult(inst.m, 0);
    for (i64 e = 0; e < inst.m; ++e) {
      if (!present[g][e]) continue;
      mpq_class total = 0;
      int sharing = 0;
      for (std::size_t h = 0; h < G; ++h) {
        total += mass[h][e];
        sharing += present[h][e] ? 1 : 0;
      }
      const mpq_class share =
          sgn(total) > 0 ? mpq_class(to_mpz(caps[e]) * mass[g][e] / total) : mpq_class(to_mpz(caps[e]), sharing);
      mpq_class units = share / to_mpz(top);
      mpz_class whole = units.get_num() / units.get_den();
      mult[e] = sgn(whole) < 0 ? 0 : whole.get_si();
    }
    std::vector<Interval> intervals;
    for (std::size_t j : classes[g]) {
      const Task& task = inst.task(ids[j]);
      intervals.push_back({task.s, task.t, task.w});
    }
    for (int pick : solve_uniform(mult, intervals)) chosen.push_back(ids[classes[g][pick]]);
  }

  // Safety net: drop the least dense task on the most violated edge.
  for (;;) {
    const auto load = edge_loads(inst, chosen);
    i64 worst = -1, excess = 0;
    for (i64 e = 0; e < inst.m; ++e)
      if (load[e] - caps[e] > excess) {
        excess = load[e] - caps[e];
        worst = e;
      }
    if (worst < 0) break;
    auto victim = chosen.end();
    for (auto it = chosen.begin(); it != chosen.end(); ++it) {
      const Task& t = inst.task(*it);
      if (!t.uses(worst)) continue;
      if (victim == chosen.end()) {
        victim = it;
        continue;
      }
      const Task& v = inst.task(*victim);
      // w/d < w'/d' without division
      if (i128{t.w} * v.d < i128{v.w} * t.d) victim = it;
    }
    if (log)
      log("solve_tiny: group " + std::to_string(k) + " edge " + std::to_string(worst) + " over by " +
          std::to_string(excess) + "; dropping task " + std::to_string(*victim));
    chosen.erase(victim);
  }

  // Greedy fill with leftover capacity, most profitable first.
  std::sort(chosen.begin(), chosen.end());
  std::vector<int> rest;
  for (int id : ids)
    if (!std::binary_search(chosen.begin(), chosen.end(), id)) rest.push_back(id);
  std::stable_sort(rest.begin(), rest.end(), [&](int a, int b) { return inst.task(a).w > inst.task(b).w; });
  auto load = edge_loads(inst, chosen);
  for (int id : rest) {
    const Task& task = inst.task(id);
    bool fits = true;
    for (i64 e = task.s; e < task.t && fits; ++e) fits = load[e] + task.d <= caps[e];
    if (!fits) continue;
    for (i64 e = task.s; e < task.t; ++e) load[e] += task.d;
    chosen.push_back(id);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace ufpp
