#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "distspec/int_matrix.hpp"

namespace distspec {

/// Univariate polynomial over the integers, constant term first, with no
/// trailing zero coefficients (the zero polynomial has no coefficients).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coefficients);

  static IntPolynomial constant(const BigInt& c);
  /// x - root
  static IntPolynomial linear_factor(const BigInt& root);
  /// prod (x - r)^m over the given (root, multiplicity) pairs.
  static IntPolynomial from_roots(const std::vector<std::pair<BigInt, int>>& roots);

  bool is_zero() const noexcept { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  /// Coefficient of x^k (zero beyond the degree).
  BigInt coefficient(int k) const;
  const BigInt& leading() const { return coefficients_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  BigInt evaluate(const BigInt& x) const;

  /// Divides by (x - root). Returns the quotient when the division is exact.
  std::optional<IntPolynomial> divide_linear(const BigInt& root) const;
  /// Exact division by a monic divisor; throws VerificationError on a nonzero remainder.
  IntPolynomial divide_exact(const IntPolynomial& monic_divisor) const;

  /// e.g. "x^3 - 2*x + 1"
  std::string to_string() const;

  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();
  std::vector<BigInt> coefficients_;
};

/// Integer roots with multiplicities, ascending, plus what is left over.
struct RootExtraction {
  std::vector<std::pair<BigInt, int>> roots;
  IntPolynomial residual;
};

/// Strips every integer linear factor (x - r) to its full multiplicity.
/// Candidates are the divisors of the lowest nonzero coefficient, cut off by
/// the Fujiwara root bound. The residual has no integer roots and
/// from_roots(roots) * residual == p. Throws DomainError for p == 0.
RootExtraction integer_roots(const IntPolynomial& p);

}  // namespace distspec
