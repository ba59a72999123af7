#include "distspec/isomorphism.hpp"

#include <algorithm>
#include <optional>

namespace distspec {

namespace {

using Coloring = std::vector<int>;

int refine(const Graph& g, Coloring& colors) {
  const int n = g.order();
  int classes = n == 0 ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
  while (true) {
    for (int v = 0; v < n; ++v) {
      auto& sig = signature[static_cast<std::size_t>(v)];
      sig.clear();
      sig.push_back(colors[static_cast<std::size_t>(v)]);
      for (int w : g.neighbors(v)) sig.push_back(colors[static_cast<std::size_t>(w)]);
      std::sort(sig.begin() + 1, sig.end());
    }
    std::vector<std::vector<int>> distinct = signature;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      colors[static_cast<std::size_t>(v)] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), signature[static_cast<std::size_t>(v)]) -
          distinct.begin());
    }
    const auto refined = static_cast<int>(distinct.size());
    if (refined == classes) return classes;
    classes = refined;
  }
}

struct Search {
  const Graph& g;
  std::optional<CanonicalForm> best;

  void leaf(const Coloring& colors) {
    const int n = g.order();
    std::vector<int> at_position(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) at_position[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])] = v;
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        bits.push_back(g.adjacent(at_position[static_cast<std::size_t>(a)], at_position[static_cast<std::size_t>(b)]));
      }
    }
    if (!best || bits < best->adjacency_bits) best = CanonicalForm{n, std::move(bits), colors};
  }

  void descend(Coloring colors) {
    const int classes = refine(g, colors);
    const int n = g.order();
    if (classes == n) {
      leaf(colors);
      return;
    }
    std::vector<int> size(static_cast<std::size_t>(classes), 0);
    for (int c : colors) ++size[static_cast<std::size_t>(c)];
    const auto target = static_cast<int>(std::find_if(size.begin(), size.end(), [](int s) { return s > 1; }) -
                                         size.begin());
    for (int v = 0; v < n; ++v) {
      if (colors[static_cast<std::size_t>(v)] != target) continue;
      Coloring next = colors;
      for (int w = 0; w < n; ++w) {
        auto& c = next[static_cast<std::size_t>(w)];
        if (c > target || (c == target && w != v)) ++c;
      }
      descend(std::move(next));
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() == 0) return {};
  Search search{g, std::nullopt};
  search.descend(Coloring(static_cast<std::size_t>(g.order()), 0));
  return *search.best;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace distspec
