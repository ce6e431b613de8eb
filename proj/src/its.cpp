#include "ufpp/its.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <unordered_map>

namespace ufpp {

Rect rectangle(const Instance& inst, const Task& task) {
  const TaskMeta meta = bottleneck(inst, task);
  if (meta.slack < 0)
    throw std::invalid_argument("task " + std::to_string(task.id) + " is not deliverable");
  return {task.s, meta.b, task.t, meta.slack};
}

bool is_its(const Instance& inst, std::span<const int> ids) {
  std::vector<Rect> rects;
  rects.reserve(ids.size());
  for (int id : ids) rects.push_back(rectangle(inst, inst.task(id)));
  for (std::size_t a = 0; a < rects.size(); ++a)
    for (std::size_t b = a + 1; b < rects.size(); ++b)
      if (!compatible(rects[a], rects[b])) return false;
  return true;
}

Corner corner_make(const Instance& inst, i64 x, i64 y, i64 z) {
  if (x < 0 || x > inst.m) throw std::out_of_range("corner x outside 0..m");
  Corner c{x, y, z, x, x};
  while (c.wL > 0 && inst.capacities[c.wL - 1] > y) --c.wL;
  while (c.wR < inst.m && inst.capacities[c.wR] > z) ++c.wR;
  return c;
}

bool corner_contains(const Instance& inst, const Corner& c, const Task& task) {
  const i64 slack = bottleneck(inst, task).slack;
  return (c.wL <= task.s && task.t <= c.wR && slack >= std::max(c.y, c.z)) ||
         (c.wL <= task.s && task.t <= c.x && slack >= c.y) ||
         (c.x <= task.s && task.t <= c.wR && slack >= c.z);
}

Instance its_working_instance(const Instance& inst) {
  Instance w = compact(deliverable(inst)).instance;
  // u' = M u + e, d' = M d - m with M > (n+1) m. Unlike the plain m-scaling,
  // this keeps b(i) <= slack(j) comparisons intact when capacities tie, so
  // the set of independent task sets is unchanged as well as feasibility.
  const i64 n = static_cast<i64>(w.tasks.size());
  const i64 scale = checked_add(checked_mul(n + 1, w.m), 1);
  for (i64 e = 0; e < w.m; ++e) w.capacities[e] = checked_add(checked_mul(scale, w.capacities[e]), e);
  for (Task& task : w.tasks) task.d = checked_sub(checked_mul(scale, task.d), w.m);
  return w;
}

namespace {

constexpr int kShrink = -1;
constexpr int kSplit = -2;

// Algorithm over corners (x, y, z) of an instance with distinct capacities.
// y and z are stored as indices into the sorted relevant values
// {0} u {capacities}; the last index is u_max.
class CornerDp {
 public:
  explicit CornerDp(const Instance& w) : w_(w), m_(w.m) {
    values_.push_back(0);
    for (i64 u : w.capacities) values_.push_back(u);
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    top_ = static_cast<int>(values_.size()) - 1;
    umax_ = values_[top_];

    auto meta = task_meta(w);
    for (std::size_t p = 0; p < w.tasks.size(); ++p) {
      b_idx_.push_back(index_of(meta[p].b));
      slack_.push_back(meta[p].slack);
    }
    by_t_.resize(w.tasks.size());
    for (std::size_t p = 0; p < by_t_.size(); ++p) by_t_[p] = static_cast<int>(p);
    by_s_ = by_t_;
    std::sort(by_t_.begin(), by_t_.end(), [&](int a, int b) { return w.tasks[a].t < w.tasks[b].t; });
    std::sort(by_s_.begin(), by_s_.end(), [&](int a, int b) { return w.tasks[a].s > w.tasks[b].s; });

    const std::size_t cells = values_.size() * static_cast<std::size_t>(m_ + 1);
    if (cells <= (std::size_t{1} << 25)) {
      wl_.resize(cells);
      wr_.resize(cells);
      for (std::size_t v = 0; v < values_.size(); ++v) {
        int* wl = &wl_[v * (m_ + 1)];
        int* wr = &wr_[v * (m_ + 1)];
        wl[0] = 0;
        for (i64 x = 1; x <= m_; ++x)
          wl[x] = w.capacities[x - 1] > values_[v] ? wl[x - 1] : static_cast<int>(x);
        wr[m_] = static_cast<int>(m_);
        for (i64 x = m_ - 1; x >= 0; --x)
          wr[x] = w.capacities[x] > values_[v] ? wr[x + 1] : static_cast<int>(x);
      }
    }
  }

  i64 run() {
    const Norm root = normalize(m_, 0, top_);
    if (root.empty) return 0;
    root_ = pack(root);
    std::vector<std::uint64_t> stack{root_};
    while (!stack.empty()) {
      const std::uint64_t key = stack.back();
      if (memo_.count(key)) {
        stack.pop_back();
        continue;
      }
      Entry entry;
      if (evaluate(unpack(key), entry, &stack)) {
        memo_.emplace(key, entry);
        // evaluate() pushed nothing, so the top is still this key.
        stack.pop_back();
      }
    }
    return memo_.at(root_).value;
  }

  std::vector<int> trace() const {
    std::vector<int> ids;
    if (memo_.empty()) return ids;
    std::vector<std::uint64_t> stack{root_};
    while (!stack.empty()) {
      const Norm c = unpack(stack.back());
      stack.pop_back();
      const Entry& e = memo_.at(pack(c));
      auto push = [&](const Norm& child) {
        if (!child.empty) stack.push_back(pack(child));
      };
      if (e.choice == kSplit) {
        push(normalize(c.x, c.yi, top_));
        push(normalize(c.x, top_, c.zi));
      } else if (e.choice == kShrink) {
        push(normalize(c.yi < c.zi ? c.x - 1 : c.x + 1, c.yi, c.zi));
      } else if (e.choice >= 0) {
        const Task& task = w_.tasks[e.choice];
        ids.push_back(task.id);
        const int b = b_idx_[e.choice];
        if (c.yi < c.zi) {
          push(normalize(task.s, c.yi, b));
          push(normalize(c.x, b, c.zi));
        } else {
          push(normalize(task.t, b, c.zi));
          push(normalize(c.x, c.yi, b));
        }
      }
    }
    std::sort(ids.begin(), ids.end());
    return ids;
  }

  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Norm {
    i64 x = 0;
    int yi = 0;
    int zi = 0;
    i64 wL = 0;
    i64 wR = 0;
    bool empty = false;
  };
  struct Entry {
    i64 value = 0;
    int choice = kShrink;  // kShrink, kSplit, or a task position
  };

  int index_of(i64 v) const {
    return static_cast<int>(std::lower_bound(values_.begin(), values_.end(), v) - values_.begin());
  }

  i64 w_left(i64 x, int yi) const {
    if (!wl_.empty()) return wl_[yi * (m_ + 1) + x];
    while (x > 0 && w_.capacities[x - 1] > values_[yi]) --x;
    return x;
  }
  i64 w_right(i64 x, int zi) const {
    if (!wr_.empty()) return wr_[zi * (m_ + 1) + x];
    while (x < m_ && w_.capacities[x] > values_[zi]) ++x;
    return x;
  }

  // Lines 1-5 applied until nothing changes; each semantic corner gets one key.
  Norm normalize(i64 x, int yi, int zi) const {
    Norm c;
    for (;;) {
      if (x == 0 || values_[yi] >= w_.capacities[x - 1]) yi = top_;
      if (x == m_ || values_[zi] >= w_.capacities[x]) zi = top_;
      c.x = x;
      c.yi = yi;
      c.zi = zi;
      c.wL = w_left(x, yi);
      c.wR = w_right(x, zi);
      if (c.wL == c.wR) {
        c.empty = true;
        return c;
      }
      if (yi != zi) return c;
      zi = top_;
      x = c.wR;
    }
  }

  std::uint64_t pack(const Norm& c) const {
    return (static_cast<std::uint64_t>(c.x) << 42) | (static_cast<std::uint64_t>(c.yi) << 21) |
           static_cast<std::uint64_t>(c.zi);
  }
  Norm unpack(std::uint64_t key) const {
    Norm c;
    c.x = static_cast<i64>(key >> 42);
    c.yi = static_cast<int>((key >> 21) & ((1u << 21) - 1));
    c.zi = static_cast<int>(key & ((1u << 21) - 1));
    c.wL = w_left(c.x, c.yi);
    c.wR = w_right(c.x, c.zi);
    return c;
  }

  i128 area(const Norm& c) const {
    return i128{c.x - c.wL} * (umax_ - values_[c.yi]) + i128{c.wR - c.x} * (umax_ - values_[c.zi]);
  }

  bool contains(const Norm& c, int p) const {
    const Task& task = w_.tasks[p];
    const i64 y = values_[c.yi], z = values_[c.zi];
    const i64 slack = slack_[p];
    return (c.wL <= task.s && task.t <= c.wR && slack >= std::max(y, z)) ||
           (c.wL <= task.s && task.t <= c.x && slack >= y) ||
           (c.x <= task.s && task.t <= c.wR && slack >= z);
  }

  // Computes P for a normalized, non-empty corner. Missing sub-corners are
  // pushed onto the stack and false is returned.
  bool evaluate(const Norm& c, Entry& out, std::vector<std::uint64_t>* stack) const {
    bool ready = true;
    const i128 parent_area = area(c);
    auto value_of = [&](const Norm& child) -> i64 {
      if (child.empty) return 0;
      if (area(child) >= parent_area) throw std::logic_error("corner recursion does not shrink");
      const std::uint64_t key = pack(child);
      auto it = memo_.find(key);
      if (it == memo_.end()) {
        stack->push_back(key);
        ready = false;
        return 0;
      }
      return it->second.value;
    };

    const i64 y = values_[c.yi], z = values_[c.zi];
    if (c.yi < c.zi) {
      if (c.x < m_ && w_.capacities[c.x - 1] <= z && z < w_.capacities[c.x]) {
        out.value = value_of(normalize(c.x, c.yi, top_)) + value_of(normalize(c.x, top_, c.zi));
        out.choice = kSplit;
        return ready;
      }
      out.value = value_of(normalize(c.x - 1, c.yi, c.zi));
      out.choice = kShrink;
      for (int p : by_t_) {
        const Task& task = w_.tasks[p];
        if (task.t > c.x) break;
        if (task.s < c.wL || !contains(c, p)) continue;
        const int b = b_idx_[p];
        const i64 v = task.w + value_of(normalize(task.s, c.yi, b)) + value_of(normalize(c.x, b, c.zi));
        consider(out, v, p);
      }
    } else {
      if (c.x >= 1 && w_.capacities[c.x] <= y && y < w_.capacities[c.x - 1]) {
        out.value = value_of(normalize(c.x, c.yi, top_)) + value_of(normalize(c.x, top_, c.zi));
        out.choice = kSplit;
        return ready;
      }
      out.value = value_of(normalize(c.x + 1, c.yi, c.zi));
      out.choice = kShrink;
      for (int p : by_s_) {
        const Task& task = w_.tasks[p];
        if (task.s < c.x) break;
        if (task.t > c.wR || !contains(c, p)) continue;
        const int b = b_idx_[p];
        const i64 v = task.w + value_of(normalize(task.t, b, c.zi)) + value_of(normalize(c.x, c.yi, b));
        consider(out, v, p);
      }
    }
    return ready;
  }

  // Shrink wins ties; among special tasks the lowest id wins.
  void consider(Entry& best, i64 v, int p) const {
    if (v > best.value ||
        (v == best.value && best.choice >= 0 && w_.tasks[p].id < w_.tasks[best.choice].id)) {
      best.value = v;
      best.choice = p;
    }
  }

  const Instance& w_;
  i64 m_;
  std::vector<i64> values_;
  int top_ = 0;
  i64 umax_ = 0;
  std::vector<int> b_idx_;
  std::vector<i64> slack_;
  std::vector<int> by_t_;
  std::vector<int> by_s_;
  std::vector<int> wl_;
  std::vector<int> wr_;
  std::unordered_map<std::uint64_t, Entry> memo_;
  std::uint64_t root_ = 0;
};

}  // namespace

Solution max_its(const Instance& inst, MaxItsStats* stats) {
  Instance w = its_working_instance(inst);
  if (w.tasks.empty()) {
    if (stats) *stats = MaxItsStats{};
    return make_solution(inst, {}, "its");
  }
  if (w.m >= (i64{1} << 21) || static_cast<i64>(w.capacities.size()) + 1 >= (i64{1} << 21))
    throw std::length_error("max_its: path too long");
  CornerDp dp(w);
  const i64 value = dp.run();
  std::vector<int> ids = dp.trace();
  Solution sol = make_solution(inst, ids, "its");
  if (sol.profit != value) throw std::logic_error("max_its: trace-back profit mismatch");
  if (!is_its(inst, sol.selected) || !check_feasible(inst, sol.selected).feasible)
    throw std::logic_error("max_its: result is not an independent task set");
  if (stats) {
    stats->memo_size = dp.memo_size();
    const std::size_t m = static_cast<std::size_t>(w.m);
    stats->memo_limit = (m + 1) * (m + 2) * (m + 2);
    stats->working_m = m;
    stats->root_value = value;
  }
  return sol;
}

namespace {

struct ColoringContext {
  const Instance& inst;
  int k;
  std::vector<Rect> rect;                       // by position
  std::vector<std::vector<i64>> bottlenecks;    // all edges attaining b, by position
};

bool uses(const Task& t, i64 e) { return t.s <= e && e < t.t; }

// F holds positions; colors are indexed by position.
void color_set(const ColoringContext& ctx, const std::vector<int>& F, std::map<int, int>& out) {
  const auto& tasks = ctx.inst.tasks;
  const int palette = 2 * ctx.k;
  if (static_cast<int>(F.size()) <= palette) {
    for (std::size_t c = 0; c < F.size(); ++c) out[F[c]] = static_cast<int>(c) + 1;
    return;
  }

  // e_B: lowest-index edge of minimum capacity among bottleneck edges of F.
  i64 eB = -1;
  for (int p : F)
    for (i64 e : ctx.bottlenecks[p])
      if (eB < 0 || ctx.inst.capacities[e] < ctx.inst.capacities[eB] ||
          (ctx.inst.capacities[e] == ctx.inst.capacities[eB] && e < eB))
        eB = e;
  std::vector<int> L;
  for (int p : F)
    if (uses(tasks[p], eB)) L.push_back(p);

  std::set<i64> sep;
  for (int p : F) {
    bool relevant = std::find(L.begin(), L.end(), p) != L.end();
    for (int q : L)
      if (!relevant && !compatible(ctx.rect[p], ctx.rect[q])) relevant = true;
    if (relevant) sep.insert(ctx.bottlenecks[p].begin(), ctx.bottlenecks[p].end());
  }
  const std::vector<i64> es(sep.begin(), sep.end());
  const std::size_t p_count = es.size();

  // parts[j] = tasks touching the edge range between separators e_j and e_{j+1}
  std::vector<std::vector<int>> parts(p_count + 1);
  for (int p : F) {
    const Task& t = tasks[p];
    for (std::size_t j = 0; j <= p_count; ++j) {
      const bool left_ok = j == 0 || t.t >= es[j - 1] + 1;
      const bool right_ok = j == p_count || t.s <= es[j];
      if (left_ok && right_ok) parts[j].push_back(p);
    }
  }

  for (std::size_t j = 0; j <= p_count; ++j) {
    if (parts[j].size() != F.size()) continue;
    // Every task touches this range: color F \ L, then give L free colors.
    std::vector<int> rest;
    for (int p : F)
      if (std::find(L.begin(), L.end(), p) == L.end()) rest.push_back(p);
    std::map<int, int> sub;
    color_set(ctx, rest, sub);
    std::vector<bool> taken(palette + 1, false);
    for (int p : rest) {
      const Task& t = tasks[p];
      if ((j > 0 && uses(t, es[j - 1])) || (j < p_count && uses(t, es[j]))) taken[sub.at(p)] = true;
    }
    int next = 1;
    for (int p : L) {
      while (next <= palette && taken[next]) ++next;
      if (next > palette) throw std::logic_error("nice_coloring: no free color for bottleneck tasks");
      sub[p] = next++;
    }
    for (auto [p, c] : sub) out[p] = c;
    return;
  }

  // Every part is smaller: color each and glue along the separators.
  std::map<int, int> acc;
  color_set(ctx, parts[0], acc);
  for (std::size_t j = 1; j <= p_count; ++j) {
    std::map<int, int> sub;
    color_set(ctx, parts[j], sub);
    std::vector<int> perm(palette + 1, 0);
    std::vector<bool> target_used(palette + 1, false);
    for (int p : parts[j]) {
      auto it = acc.find(p);
      if (it == acc.end()) continue;
      const int from = sub.at(p), to = it->second;
      if (perm[from] != 0 || target_used[to])
        throw std::logic_error("nice_coloring: overlap colors are not distinct");
      perm[from] = to;
      target_used[to] = true;
    }
    int free_to = 1;
    for (int from = 1; from <= palette; ++from) {
      if (perm[from] != 0) continue;
      while (target_used[free_to]) ++free_to;
      perm[from] = free_to;
      target_used[free_to] = true;
    }
    for (int p : parts[j])
      if (!acc.count(p)) acc[p] = perm[sub.at(p)];
  }
  for (auto [p, c] : acc) out[p] = c;
}

ColoringContext make_context(const Instance& inst, int k) {
  ColoringContext ctx{inst, k, {}, {}};
  for (const Task& task : inst.tasks) {
    const TaskMeta meta = bottleneck(inst, task);
    ctx.rect.push_back({task.s, meta.b, task.t, meta.slack});
    std::vector<i64> edges;
    for (i64 e = task.s; e < task.t; ++e)
      if (inst.capacities[e] == meta.b) edges.push_back(e);
    ctx.bottlenecks.push_back(std::move(edges));
  }
  return ctx;
}

}  // namespace

Coloring nice_coloring(const Instance& inst, std::span<const int> ids, int k) {
  if (k < 2) throw std::invalid_argument("nice_coloring: k must be >= 2");
  if (!check_feasible(inst, ids).feasible) throw std::invalid_argument("nice_coloring: set is infeasible");
  std::vector<int> F;
  for (int id : ids) {
    const Task& task = inst.task(id);
    if (task.d * k <= bottleneck(inst, task).b)
      throw std::invalid_argument("nice_coloring: task " + std::to_string(id) + " is not 1/k-large");
    F.push_back(static_cast<int>(inst.position_of(id)));
  }
  std::sort(F.begin(), F.end());
  if (std::adjacent_find(F.begin(), F.end()) != F.end())
    throw std::invalid_argument("nice_coloring: duplicate task");
  const ColoringContext ctx = make_context(inst, k);
  std::map<int, int> by_position;
  color_set(ctx, F, by_position);
  Coloring result;
  for (auto [p, c] : by_position) result[inst.tasks[p].id] = c;
  return result;
}

std::string validate_nice_coloring(const Instance& inst, std::span<const int> ids, int k,
                                   const Coloring& coloring) {
  if (coloring.size() != ids.size()) return "coloring size differs from the task set";
  std::vector<int> F(ids.begin(), ids.end());
  for (int id : F) {
    auto it = coloring.find(id);
    if (it == coloring.end()) return "task " + std::to_string(id) + " is uncolored";
    if (it->second < 1 || it->second > 2 * k) return "task " + std::to_string(id) + " has color out of range";
  }
  const ColoringContext ctx = make_context(inst, k);
  for (std::size_t a = 0; a < F.size(); ++a) {
    const std::size_t pa = inst.position_of(F[a]);
    for (std::size_t b = a + 1; b < F.size(); ++b) {
      const std::size_t pb = inst.position_of(F[b]);
      if (coloring.at(F[a]) == coloring.at(F[b]) && !compatible(ctx.rect[pa], ctx.rect[pb]))
        return "tasks " + std::to_string(F[a]) + " and " + std::to_string(F[b]) +
               " share a color but are incompatible";
    }
  }
  for (int i : F) {
    const std::size_t pi = inst.position_of(i);
    for (i64 e : ctx.bottlenecks[pi]) {
      std::set<int> seen;
      for (int j : F) {
        if (j == i) continue;
        const std::size_t pj = inst.position_of(j);
        if (!uses(inst.tasks[pj], e) || compatible(ctx.rect[pi], ctx.rect[pj])) continue;
        if (!seen.insert(coloring.at(j)).second)
          return "coloring is not nice at task " + std::to_string(i) + ", edge " + std::to_string(e);
      }
    }
  }
  return "";
}

Solution solve_large(const Instance& inst, int k) {
  if (k < 2) throw std::invalid_argument("solve_large: k must be >= 2");
  for (const Task& task : inst.tasks)
    if (checked_mul(task.d, k) <= bottleneck(inst, task).b)
      throw std::invalid_argument("solve_large: task " + std::to_string(task.id) + " is not 1/" +
                                  std::to_string(k) + "-large");
  Solution sol = max_its(inst);
  sol.algorithm = "large";
  return sol;
}

void dump_rects(std::ostream& out, const Instance& inst) {
  for (const Task& task : inst.tasks) {
    const TaskMeta meta = bottleneck(inst, task);
    out << task.id << ' ' << task.s << ' ' << meta.b << ' ' << task.t << ' ' << meta.slack << '\n';
  }
  out << "profile";
  for (i64 e = 0; e < inst.m; ++e)
    out << ' ' << e << ' ' << inst.capacities[e] << ' ' << e + 1 << ' ' << inst.capacities[e];
  out << '\n';
}

}  // namespace ufpp
