#include "kcatalan/render.hpp"

namespace kcatalan {

Json strings_of(const std::vector<Integer>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(x.get_str());
  return out;
}

std::string to_string(TriangleKind kind) {
  return kind == TriangleKind::height ? "height" : "narayana";
}

Json to_json(const TransferMatrix& system) {
  Json states = Json::array();
  for (const auto& z : system.states) states.push_back(z);
  Json matrix = Json::array();
  for (std::size_t i = 0; i < system.entries.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < system.entries.size(); ++j) {
      row.push_back(system.entries(i, j).get_str());
    }
    matrix.push_back(std::move(row));
  }
  Json out;
  out["k"] = system.k;
  out["s"] = system.s;
  out["states"] = std::move(states);
  out["matrix"] = std::move(matrix);
  return out;
}

Json to_json(const PeriodReport& report, const std::optional<std::string>& hypothesis) {
  Json out;
  out["modulus"] = report.modulus;
  out["vector_preperiod"] = report.vector_preperiod;
  out["vector_period"] = report.vector_period;
  out["scalar_preperiod"] = report.scalar_preperiod;
  out["scalar_period"] = report.scalar_period;
  out["confirmed"] = report.confirmed;
  out["hypothesis"] = hypothesis ? Json(*hypothesis) : Json(nullptr);
  return out;
}

Json to_json(const Triangle& triangle) {
  Json values = Json::array();
  for (const auto& row : triangle.rows) values.push_back(strings_of(row));
  Json out;
  out["k"] = triangle.k;
  out["kind"] = to_string(triangle.kind);
  out["values"] = std::move(values);
  return out;
}

Json to_json(const oracle::BruteCount& count) {
  Json heights = Json::object();
  for (const auto& [h, c] : count.by_max_height) heights[std::to_string(h)] = c;
  Json peaks = Json::object();
  for (const auto& [p, c] : count.by_peaks) peaks[std::to_string(p)] = c;
  Json out;
  out["total"] = count.total;
  out["weighted_total"] = count.weighted_total.get_str();
  out["by_max_height"] = std::move(heights);
  out["by_peaks"] = std::move(peaks);
  return out;
}

Json to_json(const oracle::CrossCheckReport& report) {
  Json comparisons = Json::array();
  for (const auto& c : report.comparisons) {
    comparisons.push_back(
        {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"passed", c.passed}});
  }
  Json out;
  out["k"] = report.k;
  out["n"] = report.n;
  out["passed"] = report.passed();
  out["comparisons"] = std::move(comparisons);
  return out;
}

}  // namespace kcatalan
