#include "distspec/graph.hpp"

#include <algorithm>
#include <unordered_set>

#include "distspec/error.hpp"

namespace distspec {

Graph Graph::from_edges(std::string name, std::vector<std::string> labels, std::span<const Edge> edges) {
  const auto n = static_cast<int>(labels.size());
  std::unordered_set<std::string> seen;
  for (const auto& label : labels) {
    if (!seen.insert(label).second) throw DomainError("duplicate vertex label '" + label + "'");
  }

  Graph g;
  g.name_ = std::move(name);
  g.labels_ = std::move(labels);
  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw DomainError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for " +
                        std::to_string(n) + " vertices");
    }
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    g.adjacency_[static_cast<std::size_t>(u)].push_back(v);
    g.adjacency_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (std::size_t v = 0; v < g.adjacency_.size(); ++v) {
    auto& nbrs = g.adjacency_[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw DomainError("duplicate edge at vertex " + std::to_string(v));
    }
    g.edge_count_ += nbrs.size();
  }
  g.edge_count_ /= 2;
  return g;
}

Graph Graph::from_edges(std::string name, int vertex_count, std::span<const Edge> edges) {
  if (vertex_count < 0) throw DomainError("vertex count must be nonnegative");
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(vertex_count));
  for (int v = 0; v < vertex_count; ++v) labels.push_back(std::to_string(v));
  return from_edges(std::move(name), std::move(labels), edges);
}

bool Graph::adjacent(int u, int v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<int> Graph::find_label(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < order(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::optional<int> Graph::regular_degree() const {
  if (adjacency_.empty()) return std::nullopt;
  const int d = degree(0);
  for (int v = 1; v < order(); ++v) {
    if (degree(v) != d) return std::nullopt;
  }
  return d;
}

bool Graph::is_connected() const {
  if (order() == 0) return true;
  std::vector<char> seen(adjacency_.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : neighbors(u)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == order();
}

int pair_count(int n) { return n * (n - 1); }

void validate_pair(int n, PairVertex p) {
  if (p.i < 1 || p.i > n || p.j < 1 || p.j > n || p.i == p.j) {
    throw DomainError("invalid pair-vertex " + pair_label(p) + " for n = " + std::to_string(n));
  }
}

int pair_index(int n, PairVertex p) {
  validate_pair(n, p);
  return (p.i - 1) * (n - 1) + (p.j < p.i ? p.j - 1 : p.j - 2);
}

PairVertex pair_at(int n, int index) {
  if (n < 2 || index < 0 || index >= pair_count(n)) {
    throw DomainError("pair index " + std::to_string(index) + " out of range for n = " + std::to_string(n));
  }
  const int i = index / (n - 1) + 1;
  const int offset = index % (n - 1) + 1;
  return {i, offset < i ? offset : offset + 1};
}

std::string pair_label(PairVertex p) { return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")"; }

}  // namespace distspec
