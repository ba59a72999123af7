#include "distspec/report.hpp"

#include <json.hpp>

namespace distspec {

std::string report_to_json(const IntegralityReport& report, int indent) {
  nlohmann::ordered_json j;
  j["graph"] = report.graph;
  j["order"] = report.order;
  j["method"] = to_string(report.method);
  j["integral"] = report.is_distance_integral;
  auto eigenvalues = nlohmann::ordered_json::array();
  for (const auto& [value, mult] : report.spectrum.eigenvalues) eigenvalues.push_back({value, mult});
  j["eigenvalues"] = std::move(eigenvalues);
  if (report.spectrum.residual) {
    auto coefficients = nlohmann::ordered_json::array();
    for (const auto& c : report.spectrum.residual->coefficients()) coefficients.push_back(c.get_str());
    j["residual_coefficients"] = std::move(coefficients);
  }
  j["distinct"] = report.distinct_values;
  auto checks = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  return j.dump(indent);
}

std::string matrix_to_json(const IntMatrix& m, int indent) {
  auto rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (int k = 0; k < m.cols(); ++k) row.push_back(m(i, k).get_str());
    rows.push_back(std::move(row));
  }
  return rows.dump(indent);
}

}  // namespace distspec
