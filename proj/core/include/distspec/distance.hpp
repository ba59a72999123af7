#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

/// Square matrix of pairwise shortest-path lengths of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  /// Wraps raw entries (row-major). Throws DomainError unless the entries are
  /// symmetric with zero diagonal and positive off-diagonal values.
  DistanceMatrix(int order, std::vector<int> entries);

  int order() const noexcept { return order_; }
  int operator()(int u, int v) const {
    return entries_[static_cast<std::size_t>(u) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(v)];
  }
  const std::vector<int>& entries() const noexcept { return entries_; }

  std::int64_t row_sum(int u) const;
  std::int64_t max_row_sum() const;
  int diameter() const;

  /// distance -> number of vertices at that distance from u (index 0 is u itself).
  std::vector<int> distance_distribution(int u) const;

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  int order_ = 0;
  std::vector<int> entries_;
};

/// BFS from every source. Sources are split across worker threads (see
/// thread_count()); the result does not depend on the thread count.
/// Throws DisconnectedGraphError naming two vertices in different components.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Distance between two pair-vertices of L(Cr(n)), n >= 4, from the
/// characterization: 0 if equal, 1 if they share the first or the second
/// coordinate, 3 for (i,j) against (j,i), 2 otherwise.
int closed_form_lcr_distance(int n, PairVertex a, PairVertex b);

struct IntersectionArray {
  std::vector<int> b;  ///< b_0 .. b_{d-1}
  std::vector<int> c;  ///< c_1 .. c_d

  friend bool operator==(const IntersectionArray&, const IntersectionArray&) = default;
};

/// Two vertex pairs at the same distance whose intersection counts differ.
struct DistanceRegularityWitness {
  int distance = 0;
  int v1 = 0, w1 = 0;
  int v2 = 0, w2 = 0;
  /// (c, a, b) counts for each pair: neighbors of w at distance i-1, i, i+1 from v.
  std::vector<int> counts1;
  std::vector<int> counts2;
};

struct DistanceRegularity {
  bool regular = false;
  std::optional<IntersectionArray> array;
  std::optional<DistanceRegularityWitness> witness;
};

DistanceRegularity is_distance_regular(const Graph& g);
DistanceRegularity is_distance_regular(const Graph& g, const DistanceMatrix& d);

}  // namespace distspec
