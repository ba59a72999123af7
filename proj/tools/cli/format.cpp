#include "cli/format.hpp"

#include <json.hpp>
#include <sstream>

#include "distspec/report.hpp"

namespace distspec::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void text_report(std::ostream& out, const IntegralityReport& r) {
  out << "graph: " << r.graph << "\n";
  out << "order: " << r.order << "\n";
  out << "method: " << to_string(r.method) << "\n";
  out << "result: " << (r.is_distance_integral ? "distance integral" : "NOT distance integral") << "\n";
  out << "eigenvalues:";
  for (const auto& [value, mult] : r.spectrum.eigenvalues) out << " " << value << "^" << mult;
  out << "\n";
  if (r.spectrum.residual) out << "residual: " << r.spectrum.residual->to_string() << "\n";
  out << "distinct:";
  for (auto v : r.distinct_values) out << " " << v;
  out << "\n";
  for (const auto& c : r.checks) out << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL") << " (" << c.detail << ")\n";
}

void csv_rows(std::ostream& out, const IntegralityReport& r, const std::string& n_label) {
  for (const auto& [value, mult] : r.spectrum.eigenvalues) {
    out << csv_field(r.graph) << "," << n_label << "," << value << "," << mult << "\n";
  }
  if (r.spectrum.residual) {
    out << csv_field(r.graph) << "," << n_label << "," << csv_field("residual:" + r.spectrum.residual->to_string()) << ","
        << r.spectrum.residual->degree() << "\n";
  }
}

constexpr const char* kCsvHeader = "graph,n,eigenvalue,multiplicity\n";

}  // namespace

std::string format_report(const IntegralityReport& report, OutputFormat format, const std::string& n_label) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Text: text_report(out, report); break;
    case OutputFormat::Json: out << report_to_json(report) << "\n"; break;
    case OutputFormat::Csv:
      out << kCsvHeader;
      csv_rows(out, report, n_label);
      break;
  }
  return out.str();
}

std::string format_reports(const std::vector<IntegralityReport>& reports, OutputFormat format,
                           const std::vector<std::string>& n_labels) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Text:
      for (std::size_t k = 0; k < reports.size(); ++k) {
        if (k) out << "\n";
        text_report(out, reports[k]);
      }
      break;
    case OutputFormat::Json: {
      auto all = nlohmann::ordered_json::array();
      for (const auto& r : reports) all.push_back(nlohmann::ordered_json::parse(report_to_json(r, -1)));
      out << all.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << kCsvHeader;
      for (std::size_t k = 0; k < reports.size(); ++k) csv_rows(out, reports[k], n_labels.at(k));
      break;
  }
  return out.str();
}

std::string format_distances(const Graph& g, const DistanceMatrix& d, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Text:
      out << "graph: " << g.name() << "\norder: " << d.order() << "\ndiameter: " << d.diameter() << "\n";
      for (int u = 0; u < d.order(); ++u) {
        out << g.label(u) << ":";
        for (int v = 0; v < d.order(); ++v) out << " " << d(u, v);
        out << "\n";
      }
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["graph"] = g.name();
      j["order"] = d.order();
      j["labels"] = g.labels();
      j["distances"] = nlohmann::ordered_json::parse(matrix_to_json(IntMatrix(d)));
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "u,v,distance\n";
      for (int u = 0; u < d.order(); ++u) {
        for (int v = 0; v < d.order(); ++v) out << csv_field(g.label(u)) << "," << csv_field(g.label(v)) << "," << d(u, v) << "\n";
      }
      break;
  }
  return out.str();
}

std::string format_quotient(const Graph& g, const QuotientMatrix& q, OutputFormat format,
                            const std::optional<bool>& closed_form_match) {
  std::ostringstream out;
  const auto& cells = q.partition.cells();
  switch (format) {
    case OutputFormat::Text:
      out << "graph: " << g.name() << "\ncells: " << cells.size() << "\n";
      for (std::size_t c = 0; c < cells.size(); ++c) {
        out << "cell " << c + 1 << " (size " << cells[c].size() << ", representative " << g.label(q.representatives[c])
            << "):";
        for (int v : cells[c]) out << " " << g.label(v);
        out << "\n";
      }
      out << "quotient:\n";
      for (int i = 0; i < q.matrix.rows(); ++i) {
        for (int j = 0; j < q.matrix.cols(); ++j) out << (j ? " " : "  ") << q.matrix(i, j).get_str();
        out << "\n";
      }
      if (closed_form_match) out << "closed form: " << (*closed_form_match ? "match" : "MISMATCH") << "\n";
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["graph"] = g.name();
      auto cell_labels = nlohmann::ordered_json::array();
      for (const auto& cell : cells) {
        auto labels = nlohmann::ordered_json::array();
        for (int v : cell) labels.push_back(g.label(v));
        cell_labels.push_back(std::move(labels));
      }
      j["cells"] = std::move(cell_labels);
      j["quotient"] = nlohmann::ordered_json::parse(matrix_to_json(q.matrix));
      if (closed_form_match) j["closed_form_match"] = *closed_form_match;
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "row,column,value\n";
      for (int i = 0; i < q.matrix.rows(); ++i) {
        for (int k = 0; k < q.matrix.cols(); ++k) out << i + 1 << "," << k + 1 << "," << q.matrix(i, k).get_str() << "\n";
      }
      break;
  }
  return out.str();
}

std::string format_distance_regularity(const Graph& g, const DistanceRegularity& dr, OutputFormat format) {
  std::ostringstream out;
  const auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s;
  };
  switch (format) {
    case OutputFormat::Text:
      out << "graph: " << g.name() << "\n";
      if (dr.regular) {
        out << "distance-regular: yes\nintersection array: {" << join(dr.array->b) << "; " << join(dr.array->c) << "}\n";
      } else {
        const auto& w = *dr.witness;
        out << "distance-regular: no\n";
        out << "witness: d(" << g.label(w.v1) << "," << g.label(w.w1) << ") = d(" << g.label(w.v2) << "," << g.label(w.w2)
            << ") = " << w.distance << " but (c,a,b) counts are (" << join(w.counts1) << ") vs (" << join(w.counts2)
            << ")\n";
      }
      break;
    case OutputFormat::Json: {
      nlohmann::ordered_json j;
      j["graph"] = g.name();
      j["distance_regular"] = dr.regular;
      if (dr.array) j["intersection_array"] = {{"b", dr.array->b}, {"c", dr.array->c}};
      if (dr.witness) {
        const auto& w = *dr.witness;
        j["witness"] = {{"distance", w.distance},
                        {"pair1", {g.label(w.v1), g.label(w.w1)}},
                        {"pair2", {g.label(w.v2), g.label(w.w2)}},
                        {"counts1", w.counts1},
                        {"counts2", w.counts2}};
      }
      out << j.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      out << "graph,distance_regular,b,c\n";
      out << csv_field(g.name()) << "," << (dr.regular ? "yes" : "no") << ","
          << csv_field(dr.array ? join(dr.array->b) : "") << "," << csv_field(dr.array ? join(dr.array->c) : "") << "\n";
      break;
  }
  return out.str();
}

}  // namespace distspec::cli
