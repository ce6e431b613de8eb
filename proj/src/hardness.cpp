#include "ufpp/hardness.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

namespace ufpp {

Graph parse_graph(std::istream& in) {
  Graph g;
  std::string line;
  std::size_t lineno = 0;
  int stage = 0;
  std::set<std::pair<int, int>> seen;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string word;
    if (!(ss >> word) || word[0] == '#') continue;
    if (stage == 0) {
      std::string version;
      if (word != "graph" || !(ss >> version) || version != "v1")
        throw parse_error(lineno, "expected header 'graph v1'");
      stage = 1;
    } else if (stage == 1) {
      if (word != "n" || !(ss >> g.n) || g.n < 1) throw parse_error(lineno, "expected 'n <n>' with n >= 1");
      stage = 2;
    } else {
      int a = 0, b = 0;
      if (word != "edge" || !(ss >> a >> b)) throw parse_error(lineno, "expected 'edge <a> <b>'");
      if (a < 1 || b < 1 || a > g.n || b > g.n) throw parse_error(lineno, "edge: endpoint outside 1..n");
      if (a == b) throw parse_error(lineno, "edge: self-loop");
      if (!seen.insert({std::min(a, b), std::max(a, b)}).second) throw parse_error(lineno, "edge: duplicate");
      g.edges.emplace_back(a, b);
    }
  }
  if (stage < 2) throw parse_error(lineno, "unexpected end of input");
  return g;
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_graph(in);
}

std::string emit_graph(const Graph& g) {
  std::ostringstream out;
  out << "graph v1\nn " << g.n << '\n';
  for (auto [a, b] : g.edges) out << "edge " << a << ' ' << b << '\n';
  return out.str();
}

namespace {

std::vector<std::vector<int>> adjacency(const Graph& g) {
  std::vector<std::vector<int>> adj(g.n + 1);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

}  // namespace

void validate_graph(const Graph& g) {
  if (g.edges.empty()) throw std::invalid_argument("graph: needs at least one edge");
  const auto adj = adjacency(g);
  for (int v = 1; v <= g.n; ++v)
    if (adj[v].size() > 3) throw std::invalid_argument("graph: vertex " + std::to_string(v) + " has degree > 3");
  std::vector<bool> seen(g.n + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int reached = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        stack.push_back(u);
      }
  }
  if (reached != g.n) throw std::invalid_argument("graph: not connected");
  if (g.n == 4 && g.edges.size() == 6) throw std::invalid_argument("graph: K4 is excluded");
}

bool is_proper_coloring(const Graph& g, std::span<const int> alpha) {
  if (static_cast<int>(alpha.size()) != g.n) return false;
  for (int c : alpha)
    if (c < 1 || c > 3) return false;
  for (auto [a, b] : g.edges)
    if (alpha[a - 1] == alpha[b - 1]) return false;
  return true;
}

std::vector<int> brooks_coloring(const Graph& g) {
  validate_graph(g);
  const auto adj = adjacency(g);
  std::vector<int> color(g.n + 1, 0);

  // Swap colors a and b on the Kempe chain through `start`.
  auto kempe_swap = [&](int start, int a, int b, int avoid) {
    std::vector<int> chain{start};
    std::vector<bool> in(g.n + 1, false);
    in[start] = true;
    for (std::size_t k = 0; k < chain.size(); ++k)
      for (int u : adj[chain[k]])
        if (!in[u] && (color[u] == a || color[u] == b)) {
          if (u == avoid) return false;
          in[u] = true;
          chain.push_back(u);
        }
    for (int v : chain) color[v] = color[v] == a ? b : a;
    return true;
  };

  bool stuck = false;
  for (int v = 1; v <= g.n && !stuck; ++v) {
    auto free_color = [&]() {
      bool used[4] = {false, false, false, false};
      for (int u : adj[v]) used[color[u]] = true;
      for (int c = 1; c <= 3; ++c)
        if (!used[c]) return c;
      return 0;
    };
    int c = free_color();
    for (int a = 1; a <= 3 && c == 0; ++a)
      for (int b = 1; b <= 3 && c == 0; ++b) {
        if (a == b) continue;
        int na = 0, nb = 0;
        for (int u : adj[v]) {
          if (color[u] == a) na = u;
          if (color[u] == b) nb = u;
        }
        if (na && nb && kempe_swap(na, a, b, nb)) c = free_color();
      }
    if (c == 0) stuck = true;
    color[v] = c;
  }

  if (stuck) {
    // Exhaustive fallback; a subcubic graph other than K4 is 3-colorable.
    std::fill(color.begin(), color.end(), 0);
    std::function<bool(int)> place = [&](int v) {
      if (v > g.n) return true;
      for (int c = 1; c <= 3; ++c) {
        bool ok = true;
        for (int u : adj[v]) ok = ok && color[u] != c;
        if (!ok) continue;
        color[v] = c;
        if (place(v + 1)) return true;
      }
      color[v] = 0;
      return false;
    };
    if (!place(1)) throw std::logic_error("brooks_coloring: no 3-coloring found");
  }
  std::vector<int> alpha(color.begin() + 1, color.end());
  if (!is_proper_coloring(g, alpha)) throw std::logic_error("brooks_coloring: coloring is not proper");
  return alpha;
}

Reduction reduce(const Graph& g, std::span<const int> alpha) {
  validate_graph(g);
  if (!is_proper_coloring(g, alpha)) throw std::invalid_argument("reduce: coloring is not a proper 3-coloring");
  const i64 n = g.n, m = static_cast<i64>(g.edges.size());
  Reduction r;
  Instance& inst = r.instance;
  inst.m = 2 * n + 2 * m;

  i64 total = 0;
  for (int a : alpha) total += a;
  // Path edge index j is the edge {j, j+1}, i.e. {i-1, i} with i = j+1.
  for (i64 i = 1; i <= inst.m; ++i) {
    if (i <= 2 * m) {
      inst.capacities.push_back(i % 2 == 1 ? total : total - 1);
    } else {
      const i64 k = (i + 1) / 2;
      i64 suffix = 0;
      for (i64 j = k - m; j <= n; ++j) suffix += alpha[j - 1];
      inst.capacities.push_back(suffix);
    }
  }

  auto odd_edges = [](i64 s, i64 t) { return (t + 1) / 2 - (s + 1) / 2; };  // odd i in (s, t]
  auto add = [&](i64 s, i64 t, i64 d, i64 w) {
    inst.tasks.push_back({s, t, d, w, static_cast<int>(inst.tasks.size())});
    return static_cast<int>(inst.tasks.size()) - 1;
  };
  r.vertex_tasks.resize(n);
  for (i64 i = 1; i <= n; ++i) {
    const i64 a = alpha[i - 1];
    auto high = [&](i64 s, i64 t) { return add(s, t, a, checked_mul(checked_mul(a, n), odd_edges(s, t))); };
    VertexTasks& vt = r.vertex_tasks[i - 1];
    vt.long_task = high(0, 2 * m + 2 * i - 1);
    std::vector<i64> sigma;
    for (i64 e = 0; e < m; ++e)
      if (g.edges[e].first == i || g.edges[e].second == i) sigma.push_back(e + 1);
    i64 start = 0;
    for (i64 s : sigma) {
      vt.short_tasks.push_back(high(start, 2 * s - 1));
      start = 2 * s;
    }
    vt.short_tasks.push_back(high(start, 2 * m + 2 * i));
    vt.low_task = add(2 * m + 2 * i - 1, 2 * m + 2 * i, a, 1);
    r.base_profit = checked_add(r.base_profit, checked_mul(checked_mul(a, n), m + i));
  }
  return r;
}

std::vector<int> recover_independent_set(const Reduction& r, std::span<const int> selected) {
  std::vector<int> vertices;
  for (std::size_t v = 0; v < r.vertex_tasks.size(); ++v)
    if (std::find(selected.begin(), selected.end(), r.vertex_tasks[v].long_task) != selected.end())
      vertices.push_back(static_cast<int>(v) + 1);
  return vertices;
}

Uniformized uniformize(const Instance& inst) {
  Uniformized out;
  out.instance = inst;
  const i64 umax = inst.max_capacity();
  i64 total = 0;
  for (const Task& task : inst.tasks) total = checked_add(total, task.w);
  out.dummy_profit = checked_add(total, 1);
  for (i64 e = 0; e < inst.m; ++e) {
    const i64 missing = umax - inst.capacities[e];
    for (i64 c = 0; c < missing; ++c)
      out.instance.tasks.push_back({e, e + 1, 1, out.dummy_profit, static_cast<int>(out.instance.tasks.size())});
    out.opt_shift = checked_add(out.opt_shift, checked_mul(out.dummy_profit, missing));
    out.instance.capacities[e] = umax;
  }
  return out;
}

int mis_brute(const Graph& g, int cap) {
  if (g.n > cap) throw std::length_error("mis_brute: graph exceeds the vertex cap");
  std::vector<std::uint32_t> nbr(g.n, 0);
  for (auto [a, b] : g.edges) {
    nbr[a - 1] |= 1u << (b - 1);
    nbr[b - 1] |= 1u << (a - 1);
  }
  std::function<int(std::uint32_t)> best = [&](std::uint32_t candidates) -> int {
    if (candidates == 0) return 0;
    const int v = std::countr_zero(candidates);
    const std::uint32_t rest = candidates & ~(1u << v);
    return std::max(best(rest), 1 + best(rest & ~nbr[v]));
  };
  const std::uint32_t all = g.n == 32 ? ~0u : ((1u << g.n) - 1);
  return best(all);
}

}  // namespace ufpp
