#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "ufpp/core.hpp"

namespace ufpp {

// Associated rectangle of a task: upper-left (x1, y1), lower-right (x2, y2),
// i.e. (s, b, t, slack).
struct Rect {
  i64 x1 = 0;
  i64 y1 = 0;
  i64 x2 = 0;
  i64 y2 = 0;
  friend bool operator==(const Rect&, const Rect&) = default;
};

/// Throws std::invalid_argument if the task is not deliverable (d > b).
Rect rectangle(const Instance& inst, const Task& task);

/// Closed-boundary test: the rectangles share no interior point.
inline bool compatible(const Rect& a, const Rect& b) {
  return a.x2 <= b.x1 || b.x2 <= a.x1 || a.y1 <= b.y2 || b.y1 <= a.y2;
}

bool is_its(const Instance& inst, std::span<const int> ids);

struct Corner {
  i64 x = 0;
  i64 y = 0;
  i64 z = 0;
  i64 wL = 0;
  i64 wR = 0;
};

Corner corner_make(const Instance& inst, i64 x, i64 y, i64 z);
bool corner_contains(const Instance& inst, const Corner& corner, const Task& task);

struct MaxItsStats {
  std::size_t memo_size = 0;        // distinct normalized corners evaluated
  std::size_t memo_limit = 0;       // (m+1)(m+2)^2 on the working instance
  std::size_t working_m = 0;        // path length after compaction
  i64 root_value = 0;               // P(m, 0, u_max) on the working instance
};

/// Maximum-profit independent task set. Undeliverable tasks are ignored.
Solution max_its(const Instance& inst, MaxItsStats* stats = nullptr);

/// Working instance used by max_its: compacted, then capacities made
/// distinct by a transform that keeps both feasibility and compatibility.
Instance its_working_instance(const Instance& inst);

using Coloring = std::map<int, int>;  // task id -> color in 1..2k

/// Nice 2k-coloring of a feasible set of 1/k-large tasks. Throws
/// std::invalid_argument on precondition violations.
Coloring nice_coloring(const Instance& inst, std::span<const int> ids, int k);

/// Empty string when valid; otherwise a description of the first failure.
std::string validate_nice_coloring(const Instance& inst, std::span<const int> ids, int k,
                                   const Coloring& coloring);

/// max_its on an instance whose tasks are all 1/k-large.
Solution solve_large(const Instance& inst, int k);

/// One line per task `id x1 y1 x2 y2`, then the capacity profile as
/// `profile` followed by `x y` points.
void dump_rects(std::ostream& out, const Instance& inst);

}  // namespace ufpp
