#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ufpp/core.hpp"

namespace ufpp {

// Simple undirected graph on vertices 1..n.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

Graph parse_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);
std::string emit_graph(const Graph& g);

/// Throws std::invalid_argument unless g is connected, simple, has at least
/// one edge, maximum degree <= 3, and is not K4.
void validate_graph(const Graph& g);

/// alpha[v-1] in {1,2,3}; proper.
std::vector<int> brooks_coloring(const Graph& g);
bool is_proper_coloring(const Graph& g, std::span<const int> alpha);

struct VertexTasks {
  int long_task = -1;
  std::vector<int> short_tasks;
  int low_task = -1;
};

struct Reduction {
  Instance instance;
  std::vector<VertexTasks> vertex_tasks;  // index v-1
  i64 base_profit = 0;                    // sum_i alpha(v_i) n (m+i)
};

Reduction reduce(const Graph& g, std::span<const int> alpha);

/// Optimum of the reduced instance for a graph whose maximum independent set has size mis.
inline i64 certified_opt(const Reduction& r, int mis) { return checked_add(r.base_profit, mis); }

/// Vertices (1-based) whose long task is selected.
std::vector<int> recover_independent_set(const Reduction& r, std::span<const int> selected);

struct Uniformized {
  Instance instance;
  i64 dummy_profit = 0;  // X
  i64 opt_shift = 0;     // X * sum(u_max - u_e)
};

/// Raises every capacity to u_max and pads each edge with u_max - u_e unit
/// dummy tasks of profit X = 1 + sum of all profits.
Uniformized uniformize(const Instance& inst);

/// Maximum independent set size; throws std::length_error above `cap` vertices.
int mis_brute(const Graph& g, int cap = 24);

}  // namespace ufpp
