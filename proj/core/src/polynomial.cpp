#include "distspec/polynomial.hpp"

#include <algorithm>
#include <limits>

#include "distspec/error.hpp"

namespace distspec {

namespace {

// Smallest r >= 0 with r^k >= x, for x >= 0.
BigInt ceil_root(const BigInt& x, unsigned long k) {
  BigInt r;
  mpz_root(r.get_mpz_t(), x.get_mpz_t(), k);
  BigInt power;
  mpz_pow_ui(power.get_mpz_t(), r.get_mpz_t(), k);
  if (power < x) ++r;
  return r;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Fujiwara: every complex root z satisfies |z| <= 2 max_k |a_{d-k}/a_d|^{1/k}.
BigInt fujiwara_bound(const IntPolynomial& p) {
  const int d = p.degree();
  const BigInt lead = abs(p.leading());
  BigInt best = 0;
  for (int k = 1; k <= d; ++k) {
    const BigInt ratio = ceil_div(abs(p.coefficient(d - k)), lead);
    best = std::max(best, ceil_root(ratio, static_cast<unsigned long>(k)));
  }
  return 2 * best;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) { normalize(); }

void IntPolynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial({c}); }

IntPolynomial IntPolynomial::linear_factor(const BigInt& root) { return IntPolynomial({-root, BigInt(1)}); }

IntPolynomial IntPolynomial::from_roots(const std::vector<std::pair<BigInt, int>>& roots) {
  IntPolynomial out = constant(1);
  for (const auto& [root, multiplicity] : roots) {
    for (int t = 0; t < multiplicity; ++t) out = out * linear_factor(root);
  }
  return out;
}

BigInt IntPolynomial::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coefficients_.size())) return 0;
  return coefficients_[static_cast<std::size_t>(k)];
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::optional<IntPolynomial> IntPolynomial::divide_linear(const BigInt& root) const {
  if (is_zero()) return IntPolynomial{};
  const int d = degree();
  if (d == 0) return std::nullopt;
  std::vector<BigInt> quotient(static_cast<std::size_t>(d));
  BigInt carry = 0;
  for (int k = d; k >= 1; --k) {
    carry = coefficients_[static_cast<std::size_t>(k)] + root * carry;
    quotient[static_cast<std::size_t>(k - 1)] = carry;
  }
  if (coefficients_[0] + root * carry != 0) return std::nullopt;
  return IntPolynomial(std::move(quotient));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (!divisor.is_monic()) throw DomainError("divide_exact needs a monic divisor");
  if (is_zero()) return {};
  const int dd = divisor.degree();
  if (degree() < dd) throw VerificationError("polynomial division leaves a remainder");
  std::vector<BigInt> remainder = coefficients_;
  std::vector<BigInt> quotient(static_cast<std::size_t>(degree() - dd + 1));
  for (int k = degree() - dd; k >= 0; --k) {
    const BigInt factor = remainder[static_cast<std::size_t>(k + dd)];
    quotient[static_cast<std::size_t>(k)] = factor;
    if (factor == 0) continue;
    for (int t = 0; t <= dd; ++t) {
      remainder[static_cast<std::size_t>(k + t)] -= factor * divisor.coefficients_[static_cast<std::size_t>(t)];
    }
  }
  for (int k = 0; k < dd; ++k) {
    if (remainder[static_cast<std::size_t>(k)] != 0) throw VerificationError("polynomial division leaves a remainder");
  }
  return IntPolynomial(std::move(quotient));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigInt& c = coefficients_[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const BigInt magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool show_coefficient = magnitude != 1 || k == 0;
    if (show_coefficient) out += magnitude.get_str();
    if (k > 0) {
      if (show_coefficient) out += "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coefficients_.size() + b.coefficients_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < b.coefficients_.size(); ++j) out[i + j] += a.coefficients_[i] * b.coefficients_[j];
  }
  return IntPolynomial(std::move(out));
}

RootExtraction integer_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw DomainError("integer_roots of the zero polynomial");
  RootExtraction result;

  // x^k factor.
  const auto& c = p.coefficients();
  const auto zeros = static_cast<std::size_t>(std::find_if(c.begin(), c.end(), [](const BigInt& v) { return v != 0; }) -
                                              c.begin());
  IntPolynomial rest(std::vector<BigInt>(c.begin() + static_cast<std::ptrdiff_t>(zeros), c.end()));
  if (zeros > 0) result.roots.emplace_back(BigInt(0), static_cast<int>(zeros));

  const auto strip = [&](const BigInt& r) {
    int multiplicity = 0;
    while (rest.degree() >= 1) {
      auto q = rest.divide_linear(r);
      if (!q) break;
      rest = std::move(*q);
      ++multiplicity;
    }
    if (multiplicity > 0) result.roots.emplace_back(r, multiplicity);
  };

  if (rest.degree() >= 1) {
    BigInt limit = std::min(fujiwara_bound(rest), BigInt(abs(rest.coefficient(0))));
    if (!limit.fits_ulong_p()) throw DomainError("integer root search bound " + limit.get_str() + " is too large");
    for (unsigned long r = 1; r <= limit.get_ui() && rest.degree() >= 1; ++r) {
      const BigInt constant = rest.coefficient(0);
      if (!mpz_divisible_ui_p(constant.get_mpz_t(), r)) continue;
      strip(BigInt(r));
      strip(-BigInt(r));
      // The constant term of the deflated polynomial only shrinks.
      limit = std::min(limit, BigInt(abs(rest.coefficient(0))));
    }
  }

  std::sort(result.roots.begin(), result.roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  result.residual = std::move(rest);
  return result;
}

}  // namespace distspec
