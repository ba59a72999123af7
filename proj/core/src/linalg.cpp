#include "distspec/linalg.hpp"

#include <algorithm>
#include <utility>

#include "distspec/error.hpp"

namespace distspec {

namespace {

using Rows = std::vector<std::vector<BigInt>>;

Rows to_rows(const IntMatrix& m) {
  Rows rows(static_cast<std::size_t>(m.rows()), std::vector<BigInt>(static_cast<std::size_t>(m.cols())));
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  }
  return rows;
}

struct Echelon {
  int rank = 0;
  int swaps = 0;
  BigInt last_pivot = 1;
  bool full_diagonal = true;  ///< every column had a pivot (square case: nonsingular)
};

// Fraction-free Gaussian elimination in place. After step k every entry below
// the pivot rows is a (k+1)-minor of the input, so the division by the
// previous pivot is exact.
Echelon bareiss(Rows& a, int cols) {
  Echelon e;
  const auto row_count = static_cast<int>(a.size());
  BigInt previous = 1;
  BigInt t1, t2;
  int row = 0;
  for (int col = 0; col < cols && row < row_count; ++col) {
    int pivot = row;
    while (pivot < row_count && a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)] == 0) ++pivot;
    if (pivot == row_count) {
      e.full_diagonal = false;
      continue;
    }
    if (pivot != row) {
      std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(row)]);
      ++e.swaps;
    }
    const auto& pivot_row = a[static_cast<std::size_t>(row)];
    const BigInt& p = pivot_row[static_cast<std::size_t>(col)];
    for (int i = row + 1; i < row_count; ++i) {
      auto& r = a[static_cast<std::size_t>(i)];
      const BigInt factor = r[static_cast<std::size_t>(col)];
      for (int j = col + 1; j < cols; ++j) {
        auto& x = r[static_cast<std::size_t>(j)];
        mpz_mul(t1.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        mpz_mul(t2.get_mpz_t(), factor.get_mpz_t(), pivot_row[static_cast<std::size_t>(j)].get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(x.get_mpz_t(), t1.get_mpz_t(), previous.get_mpz_t());
      }
      r[static_cast<std::size_t>(col)] = 0;
    }
    previous = p;
    ++row;
  }
  e.rank = row;
  e.last_pivot = previous;
  if (row < cols) e.full_diagonal = false;
  return e;
}

}  // namespace

IntPolynomial char_poly(const IntMatrix& m) {
  if (!m.is_square()) throw DomainError("characteristic polynomial of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return IntPolynomial::constant(1);

  // Coefficients highest degree first while iterating.
  std::vector<BigInt> poly{BigInt(1), BigInt(-m(0, 0))};
  std::vector<BigInt> column, next_column;
  for (int r = 1; r < n; ++r) {
    // Leading block [[M, C], [R, a]] with M the r x r principal submatrix.
    // Toeplitz column: 1, -a, -R C, -R M C, ..., -R M^{r-1} C.
    std::vector<BigInt> toeplitz(static_cast<std::size_t>(r) + 2);
    toeplitz[0] = 1;
    toeplitz[1] = -m(r, r);
    column.assign(static_cast<std::size_t>(r), BigInt(0));
    for (int i = 0; i < r; ++i) column[static_cast<std::size_t>(i)] = m(i, r);
    for (int k = 0; k < r; ++k) {
      BigInt dot = 0;
      for (int j = 0; j < r; ++j) dot += m(r, j) * column[static_cast<std::size_t>(j)];
      toeplitz[static_cast<std::size_t>(k) + 2] = -dot;
      if (k + 1 == r) break;
      next_column.assign(static_cast<std::size_t>(r), BigInt(0));
      for (int i = 0; i < r; ++i) {
        BigInt& acc = next_column[static_cast<std::size_t>(i)];
        for (int j = 0; j < r; ++j) acc += m(i, j) * column[static_cast<std::size_t>(j)];
      }
      column.swap(next_column);
    }

    std::vector<BigInt> next(static_cast<std::size_t>(r) + 2, BigInt(0));
    for (std::size_t i = 0; i < next.size(); ++i) {
      for (std::size_t j = 0; j < poly.size() && j <= i; ++j) next[i] += toeplitz[i - j] * poly[j];
    }
    poly.swap(next);
  }
  std::reverse(poly.begin(), poly.end());
  return IntPolynomial(std::move(poly));
}

BigInt determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Rows a = to_rows(m);
  const Echelon e = bareiss(a, m.cols());
  if (!e.full_diagonal) return 0;
  return (e.swaps % 2 == 0) ? e.last_pivot : BigInt(-e.last_pivot);
}

int rank(const IntMatrix& m) {
  Rows a = to_rows(m);
  return bareiss(a, m.cols()).rank;
}

int eigen_multiplicity(const IntMatrix& m, const BigInt& lambda) {
  if (!m.is_square()) throw DomainError("eigenvalue multiplicity of a non-square matrix");
  return m.rows() - rank(m.shifted(lambda));
}

std::vector<RationalVector> kernel_basis(const IntMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(rows), std::vector<Rational>(static_cast<std::size_t>(cols)));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  }

  // Reduced row echelon form over Q.
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pivot = row;
    while (pivot < rows && a[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(row)]);
    auto& pr = a[static_cast<std::size_t>(row)];
    const Rational inv = 1 / pr[static_cast<std::size_t>(col)];
    for (int j = col; j < cols; ++j) pr[static_cast<std::size_t>(j)] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row) continue;
      auto& r = a[static_cast<std::size_t>(i)];
      const Rational factor = r[static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (int j = col; j < cols; ++j) r[static_cast<std::size_t>(j)] -= factor * pr[static_cast<std::size_t>(j)];
    }
    pivot_col.push_back(col);
    ++row;
  }

  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = 1;

  std::vector<RationalVector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(cols), Rational(0));
    v[static_cast<std::size_t>(free)] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
      v[static_cast<std::size_t>(pivot_col[r])] = -a[r][static_cast<std::size_t>(free)];
    }

    // Scale to a primitive integer vector with positive leading entry.
    BigInt lcm = 1, gcd = 0;
    for (const auto& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    for (auto& q : v) {
      q *= lcm;
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), q.get_num_mpz_t());
    }
    const auto lead = std::find_if(v.begin(), v.end(), [](const Rational& q) { return q != 0; });
    const Rational scale = Rational(*lead < 0 ? -1 : 1) / Rational(gcd);
    for (auto& q : v) q *= scale;
    basis.emplace_back(std::move(v));
  }
  return basis;
}

RationalVector mat_vec(const IntMatrix& m, const RationalVector& v) {
  if (static_cast<std::size_t>(m.cols()) != v.size()) {
    throw DomainError("matrix has " + std::to_string(m.cols()) + " columns but vector has " +
                      std::to_string(v.size()) + " entries");
  }
  std::vector<Rational> out(static_cast<std::size_t>(m.rows()), Rational(0));
  for (int i = 0; i < m.rows(); ++i) {
    Rational& acc = out[static_cast<std::size_t>(i)];
    for (int j = 0; j < m.cols(); ++j) {
      if (m(i, j) != 0) acc += m(i, j) * v[static_cast<std::size_t>(j)];
    }
  }
  return RationalVector(std::move(out));
}

}  // namespace distspec
