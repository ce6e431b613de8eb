#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ufpp/numeric.hpp"

namespace ufpp {

// A task routes demand d from vertex s to vertex t and is worth w.
// Edge e = {e, e+1} is used iff s <= e < t.
struct Task {
  i64 s = 0;
  i64 t = 0;
  i64 d = 1;
  i64 w = 0;
  int id = 0;

  bool uses(i64 edge) const { return s <= edge && edge < t; }
  friend bool operator==(const Task&, const Task&) = default;
};

// Path with vertices 0..m; capacities[e] is the capacity of edge {e, e+1}.
struct Instance {
  i64 m = 0;
  std::vector<i64> capacities;
  std::vector<Task> tasks;

  std::size_t size() const { return tasks.size(); }
  /// Position of the task with the given id; throws std::out_of_range.
  std::size_t position_of(int id) const;
  const Task& task(int id) const { return tasks[position_of(id)]; }
  i64 max_capacity() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct TaskMeta {
  i64 b = 0;                // bottleneck capacity
  i64 slack = 0;            // b - d
  i64 bottleneck_edge = 0;  // lowest-index edge attaining b
};

struct Solution {
  std::vector<int> selected;  // sorted task ids
  i64 profit = 0;
  std::string algorithm;
  // Set by resource-augmented solvers: the selection is feasible once every
  // capacity is multiplied by this factor.
  std::optional<Rational> capacity_scale;
};

struct Violation {
  i64 edge = 0;
  i64 load = 0;
  i64 capacity = 0;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<Violation> violations;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class invalid_instance : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws invalid_instance naming the offending field.
void validate(const Instance& inst);

Instance parse_instance(std::istream& in);
Instance parse_instance(std::string_view text);
Instance read_instance_file(const std::string& path);
/// Canonical text; task ids are implied by order, so parse(emit(x)) renumbers
/// ids to 0..n-1.
std::string emit_instance(const Instance& inst);

FeasibilityReport check_feasible(const Instance& inst, std::span<const int> ids);
/// Feasibility against capacities u_e * scale (resource augmentation).
FeasibilityReport check_feasible_scaled(const Instance& inst, std::span<const int> ids,
                                        const Rational& scale);
/// Per-edge load of the given task set.
std::vector<i64> edge_loads(const Instance& inst, std::span<const int> ids);

TaskMeta bottleneck(const Instance& inst, const Task& task);
/// Meta for every task, indexed by position.
std::vector<TaskMeta> task_meta(const Instance& inst);

struct Classification {
  std::vector<int> small;
  std::vector<int> large;
};

/// small = {i : d_i <= delta * b(i)}, exact arithmetic.
Classification classify(const Instance& inst, const Rational& delta);

struct Compaction {
  Instance instance;
  // old vertex -> new vertex, or -1 when the vertex was contracted away
  std::vector<i64> vertex_map;
  // new edge -> first and last old edge it replaces
  std::vector<std::pair<i64, i64>> edge_origin;
};

/// Keeps only vertices that are task endpoints; runs of edges between them
/// collapse to one edge of minimum capacity. A task-free instance compacts
/// to m = 1 with the minimum input capacity.
Compaction compact(const Instance& inst);

/// u'_e = m*u_e + e and d' = m*d. Capacities become pairwise distinct and the
/// family of feasible task sets is unchanged.
Instance perturb(const Instance& inst);

/// Drops tasks with d > b(i); they fit in no solution.
Instance deliverable(const Instance& inst);
/// Same path, only the listed tasks (ids preserved).
Instance restrict_to(const Instance& inst, std::span<const int> ids);

i64 profit_of(const Instance& inst, std::span<const int> ids);
Solution make_solution(const Instance& inst, std::vector<int> ids, std::string algorithm);

/// Highest profit wins; ties go to the lexicographically smallest tag.
Solution combine_best(std::span<const Solution> solutions, const Instance& inst);

}  // namespace ufpp
