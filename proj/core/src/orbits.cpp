#include "distspec/orbits.hpp"

#include <algorithm>
#include <string>

#include "distspec/error.hpp"

namespace distspec {

OrbitPartition::OrbitPartition(int degree, std::vector<std::vector<int>> cells)
    : cells_(std::move(cells)), cell_of_(static_cast<std::size_t>(degree), -1) {
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    auto& cell = cells_[c];
    if (cell.empty()) throw DomainError("partition cell " + std::to_string(c) + " is empty");
    std::sort(cell.begin(), cell.end());
    for (int v : cell) {
      if (v < 0 || v >= degree) throw DomainError("partition vertex " + std::to_string(v) + " out of range");
      if (cell_of_[static_cast<std::size_t>(v)] != -1) {
        throw DomainError("vertex " + std::to_string(v) + " appears in more than one cell");
      }
      cell_of_[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }
  }
  const auto missing = std::find(cell_of_.begin(), cell_of_.end(), -1);
  if (missing != cell_of_.end()) {
    throw DomainError("vertex " + std::to_string(missing - cell_of_.begin()) + " is not covered by the partition");
  }
}

OrbitPartition OrbitPartition::singletons(int degree) {
  std::vector<std::vector<int>> cells;
  for (int v = 0; v < degree; ++v) cells.push_back({v});
  return OrbitPartition(degree, std::move(cells));
}

OrbitPartition OrbitPartition::single_cell(int degree) {
  std::vector<int> all(static_cast<std::size_t>(degree));
  for (int v = 0; v < degree; ++v) all[static_cast<std::size_t>(v)] = v;
  return OrbitPartition(degree, {std::move(all)});
}

std::optional<int> OrbitPartition::singleton_cell() const {
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (cells_[c].size() == 1) return static_cast<int>(c);
  }
  return std::nullopt;
}

bool OrbitPartition::is_closed_under(const GeneratorSet& gens) const {
  if (gens.degree() != degree()) return false;
  for (const auto& g : gens.generators()) {
    for (int v = 0; v < degree(); ++v) {
      if (cell_of(g(v)) != cell_of(v)) return false;
    }
  }
  return true;
}

OrbitPartition OrbitPartition::reordered_by(const std::vector<int>& representatives) const {
  if (representatives.size() != cells_.size()) {
    throw DomainError("need one representative per cell (" + std::to_string(cells_.size()) + " cells, " +
                      std::to_string(representatives.size()) + " representatives)");
  }
  std::vector<std::vector<int>> cells;
  std::vector<char> taken(cells_.size(), 0);
  for (int rep : representatives) {
    const int c = cell_of(rep);
    if (taken[static_cast<std::size_t>(c)]) throw DomainError("two representatives lie in the same cell");
    taken[static_cast<std::size_t>(c)] = 1;
    cells.push_back(cells_[static_cast<std::size_t>(c)]);
  }
  return OrbitPartition(degree(), std::move(cells));
}

OrbitPartition orbits(const GeneratorSet& gens) {
  const int m = gens.degree();
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  std::vector<std::vector<int>> cells;
  for (int start = 0; start < m; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cell{start};
    seen[static_cast<std::size_t>(start)] = 1;
    for (std::size_t head = 0; head < cell.size(); ++head) {
      for (const auto& g : gens.generators()) {
        const int image = g(cell[head]);
        if (!seen[static_cast<std::size_t>(image)]) {
          seen[static_cast<std::size_t>(image)] = 1;
          cell.push_back(image);
        }
      }
    }
    cells.push_back(std::move(cell));
  }
  return OrbitPartition(m, std::move(cells));
}

Permutation pair_action(const Permutation& alpha) {
  const int n = alpha.degree();
  if (n < 2) throw DomainError("pair action needs at least two points");
  std::vector<int> images(static_cast<std::size_t>(pair_count(n)));
  for (int v = 0; v < pair_count(n); ++v) {
    const auto p = pair_at(n, v);
    images[static_cast<std::size_t>(v)] = pair_index(n, {alpha(p.i - 1) + 1, alpha(p.j - 1) + 1});
  }
  return Permutation(std::move(images));
}

Permutation swap_action(int n) {
  if (n < 3) throw DomainError("swap action defined for n >= 3");
  std::vector<int> images(static_cast<std::size_t>(pair_count(n)));
  for (int v = 0; v < pair_count(n); ++v) {
    const auto p = pair_at(n, v);
    images[static_cast<std::size_t>(v)] = pair_index(n, {p.j, p.i});
  }
  return Permutation(std::move(images));
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) {
    throw DomainError("permutation degree " + std::to_string(p.degree()) + " does not match graph order " +
                      std::to_string(g.order()));
  }
  // p is a bijection on vertices, so mapping every edge to an edge is enough
  // when the edge counts agree (they do: the image of E has |E| elements).
  for (const auto& [u, v] : g.edges()) {
    if (!g.adjacent(p(u), p(v))) return false;
  }
  return true;
}

bool is_vertex_transitive_under(const Graph& g, const GeneratorSet& gens) {
  for (std::size_t t = 0; t < gens.size(); ++t) {
    if (!is_automorphism(g, gens.generators()[t])) {
      throw DomainError("generator " + std::to_string(t) + " " + gens.generators()[t].to_cycle_string() +
                        " is not an automorphism of " + g.name());
    }
  }
  return orbits(gens).cell_count() == 1;
}

}  // namespace distspec
