#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace distspec {

using Edge = std::pair<int, int>;

/// Immutable undirected simple graph on vertices 0..order()-1.
///
/// Every vertex carries a printable label (unique within the graph) and the
/// neighbor lists are kept sorted, so adjacency queries are binary searches.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from labels and an edge list. Throws DomainError on
  /// self-loops, out-of-range endpoints, duplicate edges or duplicate labels.
  static Graph from_edges(std::string name, std::vector<std::string> labels, std::span<const Edge> edges);

  /// Same, with labels "0".."n-1".
  static Graph from_edges(std::string name, int vertex_count, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  const std::string& name() const noexcept { return name_; }

  std::span<const int> neighbors(int v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(int u, int v) const;

  const std::string& label(int v) const { return labels_.at(static_cast<std::size_t>(v)); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<int> find_label(const std::string& label) const;

  /// All edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// The common degree if the graph is regular (and nonempty).
  std::optional<int> regular_degree() const;
  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Ordered pair (i, j) of distinct points of [n], 1-based. These index the
/// vertices of the line graph of the crown graph: the edge {i, x_j} of Cr(n)
/// becomes the pair (i, j).
struct PairVertex {
  int i = 0;
  int j = 0;

  friend bool operator==(const PairVertex&, const PairVertex&) = default;
  friend auto operator<=>(const PairVertex&, const PairVertex&) = default;
};

/// Number of pair-vertices for n points: n(n-1).
int pair_count(int n);
/// Lexicographic index of (i, j) among all pairs on [n]. Throws DomainError if invalid.
int pair_index(int n, PairVertex p);
PairVertex pair_at(int n, int index);
void validate_pair(int n, PairVertex p);
std::string pair_label(PairVertex p);

}  // namespace distspec
