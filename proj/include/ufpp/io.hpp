#pragma once

#include <string>

#include "ufpp/core.hpp"

namespace ufpp {

inline constexpr const char* kSolutionSchema = "ufpp-solution/1";
inline constexpr const char* kBenchHeader = "instance,n,m,algorithm,profit,opt,ratio,wall_seconds";
inline constexpr const char* kBenchVersion = "# ufpp-bench v1";

/// {"schema", "algorithm", "profit", "selected", "feasible"[, "capacity_scale"]}
std::string solution_to_json(const Solution& sol, bool feasible);

/// Throws std::invalid_argument on malformed documents.
Solution solution_from_json(const std::string& text);

}  // namespace ufpp
