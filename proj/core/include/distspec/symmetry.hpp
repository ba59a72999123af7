#pragma once

#include <vector>

#include "distspec/orbits.hpp"
#include "distspec/permutation.hpp"

namespace distspec {

/// Generators of Sym(points) acting on {0..degree-1}: a transposition of the
/// first two points and the cycle through all of them, in the given order.
/// Returns only the identity when points has fewer than two elements.
std::vector<Permutation> symmetric_group_generators(int degree, const std::vector<int>& points);

/// A transitive automorphism group of a vertex-transitive graph, together with
/// a subgroup whose orbit partition has a singleton cell. This is what the
/// quotient-assisted spectrum needs.
struct SymmetryData {
  GeneratorSet transitive;
  GeneratorSet stabilizer;
};

/// Sym([n]) acting on pairs plus the swap (i,j) -> (j,i); transitive on V(L(Cr(n))).
GeneratorSet lcr_automorphism_generators(int n);
/// Pair action of the pointwise stabilizer of 1 and 2 in Sym([n]), i.e. Sym({3..n}).
GeneratorSet lcr_stabilizer_generators(int n);
/// Orbits of lcr_stabilizer_generators(n), n >= 4, ordered by the representatives
/// (1,2), (1,3), (3,1), (2,1), (2,3), (3,2), (3,4).
OrbitPartition lcr_stabilizer_partition(int n);
std::vector<PairVertex> lcr_stabilizer_representatives();
SymmetryData lcr_symmetry(int n);

/// Cr(n) as built by build_crown: Sym([n]) acting on both sides plus the side swap.
SymmetryData crown_symmetry(int n);
/// J(n,k) as built by build_johnson: Sym([n]) on k-subsets; stabilizer of {1..k}.
SymmetryData johnson_symmetry(int n, int k);
/// Circulant on Z_n: rotation and the reflection v -> -v (which fixes 0).
SymmetryData circulant_symmetry(int n);

}  // namespace distspec
