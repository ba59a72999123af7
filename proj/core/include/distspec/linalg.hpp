#pragma once

#include <vector>

#include "distspec/int_matrix.hpp"
#include "distspec/polynomial.hpp"

namespace distspec {

/// det(xI - m) by the division-free Berkowitz algorithm. Monic of degree n.
IntPolynomial char_poly(const IntMatrix& m);

/// Determinant by fraction-free (Bareiss) elimination.
BigInt determinant(const IntMatrix& m);

/// Rank over the rationals by fraction-free (Bareiss) elimination; the pivot
/// in each column is the first nonzero entry at or below the current row.
int rank(const IntMatrix& m);

/// order(m) - rank(m - lambda I): the geometric multiplicity of lambda. For
/// symmetric m this is also its algebraic multiplicity.
int eigen_multiplicity(const IntMatrix& m, const BigInt& lambda);

/// Basis of the rational null space. Each vector is primitive (integer
/// entries with gcd 1) with a positive first nonzero entry.
std::vector<RationalVector> kernel_basis(const IntMatrix& m);

RationalVector mat_vec(const IntMatrix& m, const RationalVector& v);

}  // namespace distspec
