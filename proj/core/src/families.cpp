#include "distspec/families.hpp"

#include <algorithm>
#include <string>

#include "distspec/error.hpp"

namespace distspec {

namespace {

std::string subset_label(const std::vector<int>& subset) {
  std::string s = "{";
  for (std::size_t t = 0; t < subset.size(); ++t) {
    if (t) s += ",";
    s += std::to_string(subset[t]);
  }
  return s + "}";
}

// Next k-subset in colex order; false after the last one.
bool next_colex(std::vector<int>& subset, int n) {
  const auto k = subset.size();
  for (std::size_t t = 0; t < k; ++t) {
    const int limit = (t + 1 < k) ? subset[t + 1] : n + 1;
    if (subset[t] + 1 < limit) {
      ++subset[t];
      for (std::size_t r = 0; r < t; ++r) subset[r] = static_cast<int>(r) + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

Graph build_crown(int n) {
  if (n < 3) throw DomainError("crown graph defined for n >= 3");
  std::vector<std::string> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  for (int j = 1; j <= n; ++j) labels.push_back("x" + std::to_string(j));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) edges.emplace_back(i, n + j);
    }
  }
  return Graph::from_edges("Cr(" + std::to_string(n) + ")", std::move(labels), edges);
}

Graph build_line_graph(const Graph& g) {
  const auto base_edges = g.edges();
  std::vector<std::string> labels;
  labels.reserve(base_edges.size());
  for (const auto& [u, v] : base_edges) labels.push_back("{" + g.label(u) + "," + g.label(v) + "}");

  // Edges sharing endpoint w form a clique; edges of a simple graph share at most one endpoint.
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.order()));
  for (std::size_t e = 0; e < base_edges.size(); ++e) {
    incident[static_cast<std::size_t>(base_edges[e].first)].push_back(static_cast<int>(e));
    incident[static_cast<std::size_t>(base_edges[e].second)].push_back(static_cast<int>(e));
  }
  std::vector<Edge> edges;
  for (const auto& star : incident) {
    for (std::size_t a = 0; a < star.size(); ++a) {
      for (std::size_t b = a + 1; b < star.size(); ++b) edges.emplace_back(star[a], star[b]);
    }
  }
  return Graph::from_edges("L(" + g.name() + ")", std::move(labels), edges);
}

Graph build_lcr(int n) {
  if (n < 3) throw DomainError("line graph of the crown graph defined for n >= 3");
  const int count = pair_count(n);
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(count));
  for (int v = 0; v < count; ++v) labels.push_back(pair_label(pair_at(n, v)));
  std::vector<Edge> edges;
  for (int u = 0; u < count; ++u) {
    const auto a = pair_at(n, u);
    for (int v = u + 1; v < count; ++v) {
      const auto b = pair_at(n, v);
      if (a.i == b.i || a.j == b.j) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges("L(Cr(" + std::to_string(n) + "))", std::move(labels), edges);
}

std::vector<std::vector<int>> johnson_subsets(int n, int k) {
  if (k < 1 || k > n - 1) {
    throw DomainError("Johnson graph J(n,k) requires 1 <= k <= n-1 (got n=" + std::to_string(n) +
                      ", k=" + std::to_string(k) + ")");
  }
  std::vector<std::vector<int>> subsets;
  std::vector<int> current(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) current[static_cast<std::size_t>(t)] = t + 1;
  do {
    subsets.push_back(current);
  } while (next_colex(current, n));
  return subsets;
}

Graph build_johnson(int n, int k) {
  const auto subsets = johnson_subsets(n, k);

  std::vector<std::string> labels;
  for (const auto& s : subsets) labels.push_back(subset_label(s));
  std::vector<Edge> edges;
  std::vector<int> common;
  for (std::size_t u = 0; u < subsets.size(); ++u) {
    for (std::size_t v = u + 1; v < subsets.size(); ++v) {
      common.clear();
      std::set_intersection(subsets[u].begin(), subsets[u].end(), subsets[v].begin(), subsets[v].end(),
                            std::back_inserter(common));
      if (static_cast<int>(common.size()) == k - 1) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
  }
  return Graph::from_edges("J(" + std::to_string(n) + "," + std::to_string(k) + ")", std::move(labels), edges);
}

Graph build_cycle(int n) {
  if (n < 3) throw DomainError("cycle graph defined for n >= 3");
  std::vector<Edge> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  edges.emplace_back(0, n - 1);
  return Graph::from_edges("C" + std::to_string(n), n, edges);
}

Graph build_complete(int n) {
  if (n < 1) throw DomainError("complete graph requires n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges("K" + std::to_string(n), n, edges);
}

Graph build_circulant(int n, const std::vector<int>& jumps) {
  if (n < 1) throw DomainError("circulant graph requires n >= 1");
  std::vector<int> normalized;
  for (int s : jumps) {
    const int r = ((s % n) + n) % n;
    if (r == 0) throw DomainError("circulant jump " + std::to_string(s) + " is 0 mod " + std::to_string(n));
    normalized.push_back(std::min(r, n - r));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int s : normalized) {
      const int v = (u + s) % n;
      edges.emplace_back(std::min(u, v), std::max(u, v));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::string name = "Circ(" + std::to_string(n) + ";";
  for (std::size_t t = 0; t < normalized.size(); ++t) name += (t ? "," : "") + std::to_string(normalized[t]);
  return Graph::from_edges(name + ")", n, edges);
}

Graph build_path(int n) {
  if (n < 1) throw DomainError("path graph requires n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph::from_edges("P" + std::to_string(n), n, edges);
}

}  // namespace distspec
