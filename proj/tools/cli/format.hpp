#pragma once

#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "distspec/distance.hpp"
#include "distspec/quotient.hpp"
#include "distspec/spectrum.hpp"

namespace distspec::cli {

/// n_label goes into the CSV "n" column (empty for file input).
std::string format_report(const IntegralityReport& report, OutputFormat format, const std::string& n_label);
std::string format_reports(const std::vector<IntegralityReport>& reports, OutputFormat format,
                           const std::vector<std::string>& n_labels);
std::string format_distances(const Graph& g, const DistanceMatrix& d, OutputFormat format);
std::string format_quotient(const Graph& g, const QuotientMatrix& q, OutputFormat format,
                            const std::optional<bool>& closed_form_match);
std::string format_distance_regularity(const Graph& g, const DistanceRegularity& dr, OutputFormat format);

}  // namespace distspec::cli
