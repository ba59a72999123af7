#include "distspec/distance.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "distspec/error.hpp"
#include "distspec/parallel.hpp"

namespace distspec {

DistanceMatrix::DistanceMatrix(int order, std::vector<int> entries) : order_(order), entries_(std::move(entries)) {
  if (order < 0 || entries_.size() != static_cast<std::size_t>(order) * static_cast<std::size_t>(order)) {
    throw DomainError("distance matrix entry count does not match its order");
  }
  for (int u = 0; u < order_; ++u) {
    if ((*this)(u, u) != 0) throw DomainError("distance matrix has a nonzero diagonal entry");
    for (int v = u + 1; v < order_; ++v) {
      if ((*this)(u, v) != (*this)(v, u)) throw DomainError("distance matrix is not symmetric");
      if ((*this)(u, v) < 1) throw DomainError("distance matrix has a non-positive off-diagonal entry");
    }
  }
}

std::int64_t DistanceMatrix::row_sum(int u) const {
  std::int64_t sum = 0;
  for (int v = 0; v < order_; ++v) sum += (*this)(u, v);
  return sum;
}

std::int64_t DistanceMatrix::max_row_sum() const {
  std::int64_t best = 0;
  for (int u = 0; u < order_; ++u) best = std::max(best, row_sum(u));
  return best;
}

int DistanceMatrix::diameter() const {
  return entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
}

std::vector<int> DistanceMatrix::distance_distribution(int u) const {
  std::vector<int> counts;
  for (int v = 0; v < order_; ++v) {
    const auto d = static_cast<std::size_t>((*this)(u, v));
    if (counts.size() <= d) counts.resize(d + 1, 0);
    ++counts[d];
  }
  return counts;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  const int n = g.order();
  if (!g.is_connected()) {
    // Name vertex 0 and the first vertex it cannot reach.
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    const auto other = static_cast<int>(std::find(seen.begin(), seen.end(), 0) - seen.begin());
    throw DisconnectedGraphError(0, other, g.label(0), g.label(other));
  }

  std::vector<int> entries(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t source) {
    int* row = entries.data() + source * static_cast<std::size_t>(n);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    row[source] = 0;
    queue.push_back(static_cast<int>(source));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int w : g.neighbors(u)) {
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
      }
    }
  });
  return DistanceMatrix(n, std::move(entries));
}

int closed_form_lcr_distance(int n, PairVertex a, PairVertex b) {
  if (n < 4) throw DomainError("closed-form distances of L(Cr(n)) require n >= 4");
  validate_pair(n, a);
  validate_pair(n, b);
  if (a == b) return 0;
  if (a.i == b.i || a.j == b.j) return 1;
  if (a.i == b.j && a.j == b.i) return 3;
  return 2;
}

DistanceRegularity is_distance_regular(const Graph& g) { return is_distance_regular(g, all_pairs_distances(g)); }

DistanceRegularity is_distance_regular(const Graph& g, const DistanceMatrix& d) {
  if (d.order() != g.order()) throw DomainError("distance matrix order does not match the graph");
  const int n = g.order();
  const int diameter = d.diameter();

  struct Seen {
    bool set = false;
    std::array<int, 3> counts{};
    int v = 0, w = 0;
  };
  std::vector<Seen> by_distance(static_cast<std::size_t>(diameter) + 1);

  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      const int i = d(v, w);
      std::array<int, 3> counts{};  // c_i, a_i, b_i
      for (int x : g.neighbors(w)) {
        const int dx = d(v, x);
        if (dx == i - 1) ++counts[0];
        else if (dx == i) ++counts[1];
        else if (dx == i + 1) ++counts[2];
      }
      auto& slot = by_distance[static_cast<std::size_t>(i)];
      if (!slot.set) {
        slot = {true, counts, v, w};
      } else if (slot.counts != counts) {
        DistanceRegularityWitness witness{i, slot.v, slot.w, v, w,
                                          {slot.counts.begin(), slot.counts.end()},
                                          {counts.begin(), counts.end()}};
        return {false, std::nullopt, std::move(witness)};
      }
    }
  }

  IntersectionArray array;
  for (int i = 0; i < diameter; ++i) array.b.push_back(by_distance[static_cast<std::size_t>(i)].counts[2]);
  for (int i = 1; i <= diameter; ++i) array.c.push_back(by_distance[static_cast<std::size_t>(i)].counts[0]);
  return {true, std::move(array), std::nullopt};
}

}  // namespace distspec
