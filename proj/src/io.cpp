#include "ufpp/io.hpp"

#include <json.hpp>

namespace ufpp {

std::string solution_to_json(const Solution& sol, bool feasible) {
  nlohmann::ordered_json doc;
  doc["schema"] = kSolutionSchema;
  doc["algorithm"] = sol.algorithm;
  doc["profit"] = sol.profit;
  doc["selected"] = sol.selected;
  doc["feasible"] = feasible;
  if (sol.capacity_scale) doc["capacity_scale"] = sol.capacity_scale->str();
  return doc.dump(2) + "\n";
}

Solution solution_from_json(const std::string& text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    if (doc.contains("schema") && doc.at("schema").get<std::string>() != kSolutionSchema)
      throw std::invalid_argument("unsupported solution schema");
    Solution sol;
    sol.algorithm = doc.value("algorithm", std::string());
    sol.profit = doc.at("profit").get<i64>();
    sol.selected = doc.at("selected").get<std::vector<int>>();
    if (doc.contains("capacity_scale"))
      sol.capacity_scale = parse_rational(doc.at("capacity_scale").get<std::string>());
    return sol;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed solution: ") + e.what());
  }
}

}  // namespace ufpp
