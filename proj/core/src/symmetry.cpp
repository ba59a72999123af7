#include "distspec/symmetry.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "distspec/error.hpp"
#include "distspec/families.hpp"

namespace distspec {

std::vector<Permutation> symmetric_group_generators(int degree, const std::vector<int>& points) {
  if (points.size() < 2) return {Permutation::identity(degree)};
  auto transposition = Permutation::identity(degree).images();
  std::swap(transposition[static_cast<std::size_t>(points[0])], transposition[static_cast<std::size_t>(points[1])]);
  auto cycle = Permutation::identity(degree).images();
  for (std::size_t t = 0; t < points.size(); ++t) {
    cycle[static_cast<std::size_t>(points[t])] = points[(t + 1) % points.size()];
  }
  std::vector<Permutation> gens{Permutation(std::move(transposition))};
  Permutation c(std::move(cycle));
  if (!(c == gens.front())) gens.push_back(std::move(c));
  return gens;
}

namespace {

std::vector<int> range(int first, int last) {
  std::vector<int> out;
  for (int v = first; v < last; ++v) out.push_back(v);
  return out;
}

std::vector<Permutation> lift_to_pairs(const std::vector<Permutation>& point_gens) {
  std::vector<Permutation> out;
  for (const auto& alpha : point_gens) out.push_back(pair_action(alpha));
  return out;
}

}  // namespace

GeneratorSet lcr_automorphism_generators(int n) {
  if (n < 3) throw DomainError("L(Cr(n)) defined for n >= 3");
  auto gens = lift_to_pairs(symmetric_group_generators(n, range(0, n)));
  gens.push_back(swap_action(n));
  return GeneratorSet(pair_count(n), std::move(gens));
}

GeneratorSet lcr_stabilizer_generators(int n) {
  if (n < 3) throw DomainError("L(Cr(n)) defined for n >= 3");
  return GeneratorSet(pair_count(n), lift_to_pairs(symmetric_group_generators(n, range(2, n))));
}

std::vector<PairVertex> lcr_stabilizer_representatives() {
  return {{1, 2}, {1, 3}, {3, 1}, {2, 1}, {2, 3}, {3, 2}, {3, 4}};
}

OrbitPartition lcr_stabilizer_partition(int n) {
  if (n < 4) throw DomainError("the seven-cell stabilizer partition of L(Cr(n)) requires n >= 4");
  std::vector<int> reps;
  for (const auto& p : lcr_stabilizer_representatives()) reps.push_back(pair_index(n, p));
  return orbits(lcr_stabilizer_generators(n)).reordered_by(reps);
}

SymmetryData lcr_symmetry(int n) { return {lcr_automorphism_generators(n), lcr_stabilizer_generators(n)}; }

SymmetryData crown_symmetry(int n) {
  if (n < 3) throw DomainError("crown graph defined for n >= 3");
  const int degree = 2 * n;
  const auto on_both_sides = [&](const Permutation& alpha) {
    std::vector<int> images(static_cast<std::size_t>(degree));
    for (int i = 0; i < n; ++i) {
      images[static_cast<std::size_t>(i)] = alpha(i);
      images[static_cast<std::size_t>(n + i)] = n + alpha(i);
    }
    return Permutation(std::move(images));
  };
  std::vector<Permutation> transitive;
  for (const auto& alpha : symmetric_group_generators(n, range(0, n))) transitive.push_back(on_both_sides(alpha));
  std::vector<int> side_swap(static_cast<std::size_t>(degree));
  for (int i = 0; i < n; ++i) {
    side_swap[static_cast<std::size_t>(i)] = n + i;
    side_swap[static_cast<std::size_t>(n + i)] = i;
  }
  transitive.emplace_back(std::move(side_swap));

  std::vector<Permutation> stabilizer;
  for (const auto& alpha : symmetric_group_generators(n, range(1, n))) stabilizer.push_back(on_both_sides(alpha));
  return {GeneratorSet(degree, std::move(transitive)), GeneratorSet(degree, std::move(stabilizer))};
}

SymmetryData johnson_symmetry(int n, int k) {
  const auto subsets = johnson_subsets(n, k);
  std::map<std::vector<int>, int> index;
  for (std::size_t v = 0; v < subsets.size(); ++v) index.emplace(subsets[v], static_cast<int>(v));
  const auto degree = static_cast<int>(subsets.size());
  const auto induced = [&](const Permutation& alpha) {
    std::vector<int> images(subsets.size());
    for (std::size_t v = 0; v < subsets.size(); ++v) {
      std::vector<int> image;
      for (int point : subsets[v]) image.push_back(alpha(point - 1) + 1);
      std::sort(image.begin(), image.end());
      images[v] = index.at(image);
    }
    return Permutation(std::move(images));
  };

  std::vector<Permutation> transitive;
  for (const auto& alpha : symmetric_group_generators(n, range(0, n))) transitive.push_back(induced(alpha));
  std::vector<Permutation> stabilizer;
  for (const auto& alpha : symmetric_group_generators(n, range(0, k))) stabilizer.push_back(induced(alpha));
  for (const auto& alpha : symmetric_group_generators(n, range(k, n))) stabilizer.push_back(induced(alpha));
  return {GeneratorSet(degree, std::move(transitive)), GeneratorSet(degree, std::move(stabilizer))};
}

SymmetryData circulant_symmetry(int n) {
  if (n < 1) throw DomainError("circulant graph requires n >= 1");
  std::vector<int> rotation(static_cast<std::size_t>(n));
  std::vector<int> reflection(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    rotation[static_cast<std::size_t>(v)] = (v + 1) % n;
    reflection[static_cast<std::size_t>(v)] = (n - v) % n;
  }
  return {GeneratorSet(n, {Permutation(std::move(rotation))}), GeneratorSet(n, {Permutation(std::move(reflection))})};
}

}  // namespace distspec
