#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "distspec/distance.hpp"

namespace distspec {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(int rows, int cols, std::vector<BigInt> entries);
  explicit IntMatrix(const DistanceMatrix& d);

  static IntMatrix identity(int order);
  /// Row-major nested list; all rows must have the same length.
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  BigInt& operator()(int r, int c) { return entries_[index(r, c)]; }
  const BigInt& operator()(int r, int c) const { return entries_[index(r, c)]; }
  const std::vector<BigInt>& entries() const noexcept { return entries_; }

  IntMatrix transpose() const;
  BigInt trace() const;
  /// this - lambda * I (square only).
  IntMatrix shifted(const BigInt& lambda) const;
  bool is_symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> entries_;
};

/// Exact rational vector; entries are always kept in lowest terms.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t size) : entries_(size, Rational(0)) {}
  explicit RationalVector(std::vector<Rational> entries);
  static RationalVector from_integers(const std::vector<long>& values);
  static RationalVector constant(std::size_t size, const Rational& value);

  std::size_t size() const noexcept { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  void set(std::size_t i, Rational value);
  const std::vector<Rational>& entries() const noexcept { return entries_; }

  bool is_zero() const;
  RationalVector scaled(const Rational& factor) const;

  friend bool operator==(const RationalVector&, const RationalVector&) = default;

 private:
  std::vector<Rational> entries_;
};

std::string to_string(const BigInt& value);

}  // namespace distspec
