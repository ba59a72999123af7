#include "distspec/int_matrix.hpp"

#include "distspec/error.hpp"

namespace distspec {

IntMatrix::IntMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), BigInt(0)) {
  if (rows < 0 || cols < 0) throw DomainError("matrix dimensions must be nonnegative");
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0 || entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw DomainError("matrix entry count does not match rows x cols");
  }
}

IntMatrix::IntMatrix(const DistanceMatrix& d) : IntMatrix(d.order(), d.order()) {
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] = d.entries()[k];
}

IntMatrix IntMatrix::identity(int order) {
  IntMatrix m(order, order);
  for (int i = 0; i < order; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const auto r = static_cast<int>(rows.size());
  const int c = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) throw DomainError("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

BigInt IntMatrix::trace() const {
  if (!is_square()) throw DomainError("trace of a non-square matrix");
  BigInt sum = 0;
  for (int i = 0; i < rows_; ++i) sum += (*this)(i, i);
  return sum;
}

IntMatrix IntMatrix::shifted(const BigInt& lambda) const {
  if (!is_square()) throw DomainError("cannot shift a non-square matrix by a multiple of the identity");
  IntMatrix out = *this;
  for (int i = 0; i < rows_; ++i) out(i, i) -= lambda;
  return out;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

RationalVector::RationalVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  for (auto& q : entries_) q.canonicalize();
}

RationalVector RationalVector::from_integers(const std::vector<long>& values) {
  std::vector<Rational> entries;
  entries.reserve(values.size());
  for (long v : values) entries.emplace_back(v);
  return RationalVector(std::move(entries));
}

RationalVector RationalVector::constant(std::size_t size, const Rational& value) {
  return RationalVector(std::vector<Rational>(size, value));
}

void RationalVector::set(std::size_t i, Rational value) {
  value.canonicalize();
  entries_.at(i) = std::move(value);
}

bool RationalVector::is_zero() const {
  for (const auto& q : entries_) {
    if (q != 0) return false;
  }
  return true;
}

RationalVector RationalVector::scaled(const Rational& factor) const {
  std::vector<Rational> out;
  out.reserve(entries_.size());
  for (const auto& q : entries_) out.emplace_back(q * factor);
  return RationalVector(std::move(out));
}

std::string to_string(const BigInt& value) { return value.get_str(); }

}  // namespace distspec
