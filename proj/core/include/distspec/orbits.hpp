#pragma once

#include <optional>
#include <vector>

#include "distspec/graph.hpp"
#include "distspec/permutation.hpp"

namespace distspec {

/// Ordered list of disjoint nonempty cells covering {0..degree-1}.
class OrbitPartition {
 public:
  OrbitPartition() = default;
  /// Validates disjointness and coverage; each cell is stored sorted.
  OrbitPartition(int degree, std::vector<std::vector<int>> cells);

  static OrbitPartition singletons(int degree);
  static OrbitPartition single_cell(int degree);

  int degree() const noexcept { return static_cast<int>(cell_of_.size()); }
  int cell_count() const noexcept { return static_cast<int>(cells_.size()); }
  const std::vector<std::vector<int>>& cells() const noexcept { return cells_; }
  const std::vector<int>& cell(int c) const { return cells_.at(static_cast<std::size_t>(c)); }
  int cell_of(int v) const { return cell_of_.at(static_cast<std::size_t>(v)); }

  /// Index of some cell of size one, if any.
  std::optional<int> singleton_cell() const;
  /// True iff every generator maps every cell onto itself.
  bool is_closed_under(const GeneratorSet& gens) const;
  /// Same cells, reordered so that cell k contains representatives[k].
  OrbitPartition reordered_by(const std::vector<int>& representatives) const;

  friend bool operator==(const OrbitPartition& a, const OrbitPartition& b) { return a.cells_ == b.cells_; }

 private:
  std::vector<std::vector<int>> cells_;
  std::vector<int> cell_of_;
};

/// Orbits of the group generated by gens, by closure over the generators.
/// Cells are ordered by their smallest vertex.
OrbitPartition orbits(const GeneratorSet& gens);

/// Induced action of alpha (a permutation of [n], as 0-based points) on the
/// pair-vertices of L(Cr(n)) in lexicographic order: (i,j) -> (alpha(i), alpha(j)).
Permutation pair_action(const Permutation& alpha);

/// The involution (i,j) -> (j,i) on the pair-vertices of L(Cr(n)).
Permutation swap_action(int n);

/// True iff p maps the edge set of g onto itself. Throws DomainError on degree mismatch.
bool is_automorphism(const Graph& g, const Permutation& p);

/// True iff gens acts transitively on V(g). Throws DomainError naming the first
/// generator that is not an automorphism.
bool is_vertex_transitive_under(const Graph& g, const GeneratorSet& gens);

}  // namespace distspec
