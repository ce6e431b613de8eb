#include "ufpp/core.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace ufpp {

std::size_t Instance::position_of(int id) const {
  // Ids are usually positions; fall back to a scan for restricted instances.
  if (id >= 0 && static_cast<std::size_t>(id) < tasks.size() && tasks[id].id == id) return id;
  for (std::size_t p = 0; p < tasks.size(); ++p)
    if (tasks[p].id == id) return p;
  throw std::out_of_range("unknown task id " + std::to_string(id));
}

i64 Instance::max_capacity() const {
  return capacities.empty() ? 0 : *std::max_element(capacities.begin(), capacities.end());
}

void validate(const Instance& inst) {
  if (inst.m < 1) throw invalid_instance("m: path needs at least one edge");
  if (static_cast<i64>(inst.capacities.size()) != inst.m)
    throw invalid_instance("cap: capacity count mismatch");
  for (std::size_t e = 0; e < inst.capacities.size(); ++e)
    if (inst.capacities[e] < 1)
      throw invalid_instance("cap: capacity of edge " + std::to_string(e) + " must be >= 1");
  for (const Task& task : inst.tasks) {
    const std::string who = "task " + std::to_string(task.id);
    if (task.s < 0 || task.t > inst.m) throw invalid_instance(who + ": s/t outside 0..m");
    if (task.s >= task.t) throw invalid_instance(who + ": s must be < t");
    if (task.d < 1) throw invalid_instance(who + ": d must be >= 1");
    if (task.w < 0) throw invalid_instance(who + ": w must be >= 0");
  }
}

namespace {

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> words;
  for (std::string w; ss >> w;) words.push_back(w);
  return words;
}

i64 parse_int(const std::string& word, std::size_t line, const char* field) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(word, &used);
    if (used != word.size()) throw std::invalid_argument(word);
    return v;
  } catch (const std::exception&) {
    throw parse_error(line, std::string(field) + ": expected integer, got '" + word + "'");
  }
}

}  // namespace

Instance parse_instance(std::istream& in) {
  Instance inst;
  enum class Expect { header, m, cap, tasks } expect = Expect::header;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto words = split_words(line);
    if (words.empty() || words[0][0] == '#') continue;
    switch (expect) {
      case Expect::header:
        if (words.size() != 2 || words[0] != "ufpp" || words[1] != "v1")
          throw parse_error(lineno, "expected header 'ufpp v1'");
        expect = Expect::m;
        break;
      case Expect::m:
        if (words.size() != 2 || words[0] != "m") throw parse_error(lineno, "expected 'm <m>'");
        inst.m = parse_int(words[1], lineno, "m");
        if (inst.m < 1) throw parse_error(lineno, "m: must be >= 1");
        expect = Expect::cap;
        break;
      case Expect::cap:
        if (words[0] != "cap") throw parse_error(lineno, "expected 'cap <u_0> ... <u_{m-1}>'");
        if (static_cast<i64>(words.size()) - 1 != inst.m)
          throw parse_error(lineno, "capacity count mismatch: expected " + std::to_string(inst.m) +
                                        ", got " + std::to_string(words.size() - 1));
        for (std::size_t k = 1; k < words.size(); ++k) {
          i64 u = parse_int(words[k], lineno, "cap");
          if (u < 1) throw parse_error(lineno, "cap: capacity must be >= 1");
          inst.capacities.push_back(u);
        }
        expect = Expect::tasks;
        break;
      case Expect::tasks: {
        if (words[0] != "task" || words.size() != 5)
          throw parse_error(lineno, "expected 'task <s> <t> <d> <w>'");
        Task task;
        task.s = parse_int(words[1], lineno, "s");
        task.t = parse_int(words[2], lineno, "t");
        task.d = parse_int(words[3], lineno, "d");
        task.w = parse_int(words[4], lineno, "w");
        task.id = static_cast<int>(inst.tasks.size());
        if (task.s < 0 || task.t > inst.m) throw parse_error(lineno, "s/t: outside 0..m");
        if (task.s >= task.t) throw parse_error(lineno, "s: must be < t");
        if (task.d < 1) throw parse_error(lineno, "d: must be >= 1");
        if (task.w < 0) throw parse_error(lineno, "w: must be >= 0");
        inst.tasks.push_back(task);
        break;
      }
    }
  }
  if (expect != Expect::tasks) throw parse_error(lineno, "unexpected end of input");
  return inst;
}

Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_instance(in);
}

std::string emit_instance(const Instance& inst) {
  std::ostringstream out;
  out << "ufpp v1\n";
  out << "m " << inst.m << '\n';
  out << "cap";
  for (i64 u : inst.capacities) out << ' ' << u;
  out << '\n';
  for (const Task& task : inst.tasks)
    out << "task " << task.s << ' ' << task.t << ' ' << task.d << ' ' << task.w << '\n';
  return out.str();
}

std::vector<i64> edge_loads(const Instance& inst, std::span<const int> ids) {
  std::vector<i64> diff(inst.m + 1, 0);
  for (int id : ids) {
    const Task& task = inst.task(id);
    diff[task.s] = checked_add(diff[task.s], task.d);
    diff[task.t] = checked_sub(diff[task.t], task.d);
  }
  std::vector<i64> load(inst.m, 0);
  i64 running = 0;
  for (i64 e = 0; e < inst.m; ++e) {
    running = checked_add(running, diff[e]);
    load[e] = running;
  }
  return load;
}

FeasibilityReport check_feasible(const Instance& inst, std::span<const int> ids) {
  return check_feasible_scaled(inst, ids, Rational(1));
}

FeasibilityReport check_feasible_scaled(const Instance& inst, std::span<const int> ids,
                                        const Rational& scale) {
  FeasibilityReport report;
  auto load = edge_loads(inst, ids);
  for (i64 e = 0; e < inst.m; ++e) {
    // load <= u_e * scale
    if (!leq_scaled(load[e], scale, inst.capacities[e])) {
      report.feasible = false;
      report.violations.push_back({e, load[e], inst.capacities[e]});
    }
  }
  return report;
}

TaskMeta bottleneck(const Instance& inst, const Task& task) {
  TaskMeta meta;
  meta.b = std::numeric_limits<i64>::max();
  for (i64 e = task.s; e < task.t; ++e) {
    if (inst.capacities[e] < meta.b) {
      meta.b = inst.capacities[e];
      meta.bottleneck_edge = e;
    }
  }
  meta.slack = meta.b - task.d;
  return meta;
}

std::vector<TaskMeta> task_meta(const Instance& inst) {
  std::vector<TaskMeta> meta;
  meta.reserve(inst.tasks.size());
  for (const Task& task : inst.tasks) meta.push_back(bottleneck(inst, task));
  return meta;
}

Classification classify(const Instance& inst, const Rational& delta) {
  Classification out;
  for (const Task& task : inst.tasks) {
    const i64 b = bottleneck(inst, task).b;
    if (leq_scaled(task.d, delta, b))
      out.small.push_back(task.id);
    else
      out.large.push_back(task.id);
  }
  return out;
}

Compaction compact(const Instance& inst) {
  Compaction out;
  out.vertex_map.assign(inst.m + 1, -1);
  if (inst.tasks.empty()) {
    out.instance.m = 1;
    out.instance.capacities = {*std::min_element(inst.capacities.begin(), inst.capacities.end())};
    out.edge_origin = {{0, inst.m - 1}};
    out.vertex_map[0] = 0;
    out.vertex_map[inst.m] = 1;
    return out;
  }
  std::vector<i64> keep;
  for (const Task& task : inst.tasks) {
    keep.push_back(task.s);
    keep.push_back(task.t);
  }
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  for (std::size_t k = 0; k < keep.size(); ++k) out.vertex_map[keep[k]] = static_cast<i64>(k);

  out.instance.m = static_cast<i64>(keep.size()) - 1;
  for (std::size_t k = 0; k + 1 < keep.size(); ++k) {
    i64 lo = keep[k], hi = keep[k + 1] - 1;
    out.instance.capacities.push_back(
        *std::min_element(inst.capacities.begin() + lo, inst.capacities.begin() + hi + 1));
    out.edge_origin.emplace_back(lo, hi);
  }
  for (Task task : inst.tasks) {
    task.s = out.vertex_map[task.s];
    task.t = out.vertex_map[task.t];
    out.instance.tasks.push_back(task);
  }
  return out;
}

Instance perturb(const Instance& inst) {
  Instance out = inst;
  for (i64 e = 0; e < inst.m; ++e)
    out.capacities[e] = checked_add(checked_mul(inst.m, inst.capacities[e]), e);
  for (Task& task : out.tasks) task.d = checked_mul(inst.m, task.d);
  return out;
}

Instance deliverable(const Instance& inst) {
  Instance out;
  out.m = inst.m;
  out.capacities = inst.capacities;
  for (const Task& task : inst.tasks)
    if (task.d <= bottleneck(inst, task).b) out.tasks.push_back(task);
  return out;
}

Instance restrict_to(const Instance& inst, std::span<const int> ids) {
  Instance out;
  out.m = inst.m;
  out.capacities = inst.capacities;
  std::vector<int> sorted(ids.begin(), ids.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (int id : sorted) out.tasks.push_back(inst.task(id));
  return out;
}

i64 profit_of(const Instance& inst, std::span<const int> ids) {
  i64 total = 0;
  for (int id : ids) total = checked_add(total, inst.task(id).w);
  return total;
}

Solution make_solution(const Instance& inst, std::vector<int> ids, std::string algorithm) {
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
    throw std::logic_error("solution lists a task twice");
  Solution sol;
  sol.profit = profit_of(inst, ids);
  sol.selected = std::move(ids);
  sol.algorithm = std::move(algorithm);
  return sol;
}

Solution combine_best(std::span<const Solution> solutions, const Instance& inst) {
  if (solutions.empty()) throw std::invalid_argument("combine_best: no solutions");
  const Solution* best = nullptr;
  for (const Solution& sol : solutions) {
    if (profit_of(inst, sol.selected) != sol.profit)
      throw std::logic_error("combine_best: profit of '" + sol.algorithm + "' is stale");
    if (best == nullptr || sol.profit > best->profit ||
        (sol.profit == best->profit && sol.algorithm < best->algorithm))
      best = &sol;
  }
  return *best;
}

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational { throw std::invalid_argument("not a rational number: '" + text + "'"); };
  if (text.empty()) return fail();
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      std::size_t a = 0, b = 0;
      i64 n = std::stoll(text.substr(0, slash), &a);
      i64 d = std::stoll(text.substr(slash + 1), &b);
      if (a != slash || b != text.size() - slash - 1) return fail();
      return Rational(n, d);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
      std::string whole = text.substr(0, dot), frac = text.substr(dot + 1);
      if (frac.empty() || frac.size() > 17 || frac.find_first_not_of("0123456789") != std::string::npos)
        return fail();
      bool negative = !whole.empty() && whole[0] == '-';
      i64 w = whole.empty() || whole == "-" ? 0 : std::stoll(whole);
      i64 scale = 1;
      for (std::size_t k = 0; k < frac.size(); ++k) scale = checked_mul(scale, 10);
      Rational f(std::stoll(frac), scale);
      return negative ? Rational(w) - f : Rational(w) + f;
    }
    std::size_t used = 0;
    i64 v = std::stoll(text, &used);
    if (used != text.size()) return fail();
    return Rational(v);
  } catch (const std::invalid_argument&) {
    return fail();
  } catch (const std::out_of_range&) {
    return fail();
  }
}

}  // namespace ufpp
