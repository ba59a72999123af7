#pragma once

#include <vector>

#include "distspec/distance.hpp"
#include "distspec/int_matrix.hpp"
#include "distspec/orbits.hpp"

namespace distspec {

/// Cell-summed distance matrix over a partition: entry (i, j) is the sum of
/// d(v, w) over w in cell j, for any v in cell i.
struct QuotientMatrix {
  IntMatrix matrix;
  OrbitPartition partition;
  std::vector<int> representatives;  ///< first vertex of each cell
};

/// Builds the quotient and checks that every member of every cell produces the
/// same row. Throws DomainError on a size mismatch and VerificationError
/// (naming the cell, two members and the column) on a non-equitable partition.
QuotientMatrix quotient_matrix(const DistanceMatrix& d, const OrbitPartition& partition);

/// Closed-form 7x7 quotient of D(L(Cr(n))) over the stabilizer orbits of
/// (1,2), (1,3), (3,1), (2,1), (2,3), (3,2), (3,4), as a function of n >= 4.
IntMatrix lcr_quotient_closed_form(int n);

}  // namespace distspec
