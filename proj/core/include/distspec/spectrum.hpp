#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distspec/graph.hpp"
#include "distspec/polynomial.hpp"
#include "distspec/symmetry.hpp"

namespace distspec {

enum class SpectrumMethod { RankSweep, CharPoly, QuotientAssisted };

std::string to_string(SpectrumMethod method);
/// Accepts "rank-sweep", "char-poly", "quotient-assisted".
std::optional<SpectrumMethod> parse_spectrum_method(const std::string& text);

/// Exact spectrum: integer eigenvalues with multiplicities (ascending), plus
/// the monic factor of the characteristic polynomial carrying every
/// non-integer eigenvalue, if there is one.
struct Spectrum {
  int order = 0;
  std::vector<std::pair<std::int64_t, int>> eigenvalues;
  std::optional<IntPolynomial> residual;

  bool integral() const { return !residual.has_value(); }
  std::vector<std::int64_t> distinct() const;
  int multiplicity(std::int64_t lambda) const;
  /// Sum of multiplicities plus the residual degree.
  int dimension() const;
  /// Sum of all eigenvalues (integer part plus the residual's root sum).
  BigInt trace() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

/// Full distance spectrum of a connected graph.
///
/// RankSweep tests every integer in [-rho, rho] (rho = max row sum of D) by
/// rank and falls back to the characteristic polynomial for the residual.
/// CharPoly factors the Berkowitz polynomial of D. QuotientAssisted takes its
/// candidates from the integer roots of the quotient over the stabilizer orbits
/// in symmetry, which must act transitively and have a singleton cell.
Spectrum distance_spectrum(const Graph& g, SpectrumMethod method, const SymmetryData* symmetry = nullptr);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct IntegralityReport {
  std::string graph;
  int order = 0;
  SpectrumMethod method = SpectrumMethod::RankSweep;
  bool is_distance_integral = false;
  Spectrum spectrum;
  std::vector<std::int64_t> distinct_values;
  std::vector<Check> checks;

  bool all_checks_pass() const;
};

/// Spectrum report for any connected graph. The checks record the spectrum
/// consistency conditions (dimension, trace).
IntegralityReport is_distance_integral(const Graph& g, SpectrumMethod method = SpectrumMethod::RankSweep,
                                       const SymmetryData* symmetry = nullptr);

/// End-to-end certification that L(Cr(n)), n >= 4, is distance integral with
/// distinct eigenvalues {-n-1, -n+3, -1, 1, 2n^2-4n+3}. Each stage appends a
/// named check; a failed stage is reported, not thrown. Throws DomainError for n < 4.
IntegralityReport verify_lcr_theorem(int n);

/// Expected spectrum of the 7x7 quotient: -1, 1, -1-n (x2), 3-n (x2), 2n^2-4n+3.
std::vector<std::pair<std::int64_t, int>> lcr_quotient_expected_roots(int n);
/// Deduplicated, ascending {-n-1, -n+3, -1, 1, 2n^2-4n+3}.
std::vector<std::int64_t> lcr_expected_distinct(int n);

}  // namespace distspec
