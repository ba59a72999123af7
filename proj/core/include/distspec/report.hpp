#pragma once

#include <string>

#include "distspec/distance.hpp"
#include "distspec/int_matrix.hpp"
#include "distspec/spectrum.hpp"

namespace distspec {

/// Report as JSON with the stable key order
/// {graph, order, method, integral, eigenvalues, residual_coefficients?, distinct, checks}.
/// Residual coefficients are decimal strings, constant term first.
std::string report_to_json(const IntegralityReport& report, int indent = 2);

/// Matrix as a JSON array of arrays of decimal strings.
std::string matrix_to_json(const IntMatrix& m, int indent = -1);

}  // namespace distspec
