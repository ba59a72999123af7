#pragma once

#include <string>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

/// Canonical certificate of a graph: the lexicographically smallest
/// adjacency bit-string over all leaves of an individualization/refinement
/// search tree. Two graphs are isomorphic iff their certificates match.
///
/// The search is exhaustive (no automorphism pruning), so it is meant for
/// graphs of modest size and symmetry.
struct CanonicalForm {
  int order = 0;
  std::vector<bool> adjacency_bits;  ///< upper triangle, row-major
  std::vector<int> labelling;        ///< canonical position of each vertex

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.order == b.order && a.adjacency_bits == b.adjacency_bits;
  }
};

CanonicalForm canonical_form(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace distspec
