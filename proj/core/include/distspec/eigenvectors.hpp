#pragma once

#include "distspec/distance.hpp"
#include "distspec/int_matrix.hpp"
#include "distspec/orbits.hpp"
#include "distspec/permutation.hpp"
#include "distspec/quotient.hpp"

namespace distspec {

// Maps between eigenvectors of a distance matrix D and of its quotient Q.
// Every function checks its eigen-equations exactly and throws
// VerificationError when an input or output fails them.

/// True iff d * f == lambda * f exactly and f != 0.
bool is_eigenvector(const IntMatrix& m, const RationalVector& f, const BigInt& lambda);

/// Spreads a cell-indexed eigenvector of q.matrix to the vertex-indexed vector
/// that is constant on cells; the result is checked against d.
RationalVector lift_eigenvector(const DistanceMatrix& d, const QuotientMatrix& q, const RationalVector& f,
                                const BigInt& lambda);

/// Restricts a cell-constant eigenvector of d to one value per cell; the
/// result is checked against the quotient of d over the partition.
RationalVector project_eigenvector(const DistanceMatrix& d, const OrbitPartition& partition, const RationalVector& f,
                                   const BigInt& lambda);

/// f^g(v) = f(v^g).
RationalVector permute_eigenvector(const RationalVector& f, const Permutation& g);
/// Same, and checks that the image is still an eigenvector of d for lambda.
RationalVector permute_eigenvector(const DistanceMatrix& d, const RationalVector& f, const Permutation& g,
                                   const BigInt& lambda);

/// Group average of f, computed per cell: output(v) is the mean of f over the
/// cell of v. When the cells are the orbits of H this equals (1/|H|) times the
/// sum of f^h over all h in H, so it is either zero or an eigenvector of d for
/// lambda that is constant on cells (both are checked). It is zero exactly
/// when every cell sum of f is zero.
/// gens must preserve d and partition must be exactly the orbits of gens.
RationalVector symmetrize_eigenvector(const DistanceMatrix& d, const RationalVector& f,
                                      const OrbitPartition& partition, const GeneratorSet& gens,
                                      const BigInt& lambda);

/// Sum of f over each cell.
std::vector<Rational> cell_sums(const RationalVector& f, const OrbitPartition& partition);

}  // namespace distspec
