#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "distspec/distance.hpp"
#include "distspec/eigenvectors.hpp"
#include "distspec/error.hpp"
#include "distspec/families.hpp"
#include "distspec/linalg.hpp"
#include "distspec/orbits.hpp"
#include "distspec/quotient.hpp"
#include "distspec/symmetry.hpp"

namespace distspec {
namespace {

// Every element of the group generated by gens, by breadth-first closure.
std::vector<Permutation> group_elements(const GeneratorSet& gens) {
  std::set<std::vector<int>> seen{Permutation::identity(gens.degree()).images()};
  std::vector<Permutation> elements{Permutation::identity(gens.degree())};
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (const auto& g : gens.generators()) {
      auto next = compose(g, elements[k]);
      if (seen.insert(next.images()).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

TEST(QuotientTest, SingletonsReproduceDistanceMatrix) {
  const auto d = all_pairs_distances(build_lcr(4));
  const auto q = quotient_matrix(d, OrbitPartition::singletons(12));
  EXPECT_EQ(q.matrix, IntMatrix(d));
}

TEST(QuotientTest, LcrFirstRowAtFour) {
  const auto d = all_pairs_distances(build_lcr(4));
  const auto q = quotient_matrix(d, lcr_stabilizer_partition(4));
  const std::vector<long> row{0, 2, 4, 3, 4, 2, 4};
  for (int j = 0; j < 7; ++j) EXPECT_EQ(q.matrix(0, j), row[static_cast<std::size_t>(j)]);
}

TEST(QuotientTest, ClosedFormMatchesComputed) {
  for (int n = 4; n <= 9; ++n) {
    const auto q = quotient_matrix(all_pairs_distances(build_lcr(n)), lcr_stabilizer_partition(n));
    EXPECT_EQ(q.matrix, lcr_quotient_closed_form(n)) << n;
    // Row sums equal the common row sum of D.
    for (int i = 0; i < 7; ++i) {
      BigInt s = 0;
      for (int j = 0; j < 7; ++j) s += q.matrix(i, j);
      EXPECT_EQ(s, 2 * n * n - 4 * n + 3);
    }
  }
}

TEST(QuotientTest, ClosedFormEntries) {
  EXPECT_EQ(lcr_quotient_closed_form(4)(6, 6), 3);
  EXPECT_EQ(lcr_quotient_closed_form(5)(1, 6), 10);
  EXPECT_THROW(lcr_quotient_closed_form(3), DomainError);
}

TEST(QuotientTest, NonEquitablePartitionIsReported) {
  const auto d = all_pairs_distances(build_path(3));
  try {
    quotient_matrix(d, OrbitPartition(3, {{0, 1}, {2}}));
    FAIL() << "expected an error";
  } catch (const VerificationError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("cell 0"), std::string::npos) << what;
    EXPECT_NE(what.find("vertices 0 and 1"), std::string::npos) << what;
    EXPECT_NE(what.find("to cell 1"), std::string::npos) << what;
  }
  EXPECT_THROW(quotient_matrix(d, OrbitPartition::singletons(4)), DomainError);
}

TEST(QuotientTest, OrbitPartitionsOfFamiliesAreEquitable) {
  const auto check = [](const Graph& g, const SymmetryData& s) {
    const auto d = all_pairs_distances(g);
    EXPECT_NO_THROW(quotient_matrix(d, orbits(s.stabilizer))) << g.name();
    EXPECT_NO_THROW(quotient_matrix(d, orbits(s.transitive))) << g.name();
  };
  for (int n = 3; n <= 6; ++n) check(build_crown(n), crown_symmetry(n));
  check(build_johnson(6, 2), johnson_symmetry(6, 2));
  check(build_circulant(10, {1, 4}), circulant_symmetry(10));
}

TEST(LiftTest, OneCellAllOnesIsPerron) {
  const auto d = all_pairs_distances(build_lcr(5));
  const auto q = quotient_matrix(d, OrbitPartition::single_cell(20));
  EXPECT_EQ(q.matrix(0, 0), 33);
  const auto lifted = lift_eigenvector(d, q, RationalVector::constant(1, 1), 33);
  EXPECT_EQ(lifted, RationalVector::constant(20, 1));
  EXPECT_EQ(project_eigenvector(d, OrbitPartition::single_cell(20), lifted, 33), RationalVector::constant(1, 1));
}

TEST(LiftTest, SingletonLiftIsIdentity) {
  const auto d = all_pairs_distances(build_lcr(4));
  const auto q = quotient_matrix(d, OrbitPartition::singletons(12));
  for (const auto& f : kernel_basis(IntMatrix(d).shifted(-5))) EXPECT_EQ(lift_eigenvector(d, q, f, -5), f);
}

TEST(LiftTest, QuotientEigenvectorsLiftAndProjectBack) {
  for (int n = 4; n <= 7; ++n) {
    const auto d = all_pairs_distances(build_lcr(n));
    const auto pi = lcr_stabilizer_partition(n);
    const auto q = quotient_matrix(d, pi);
    const auto roots = integer_roots(char_poly(q.matrix));
    for (const auto& [lambda, mult] : roots.roots) {
      const auto basis = kernel_basis(q.matrix.shifted(lambda));
      ASSERT_FALSE(basis.empty());
      for (const auto& f : basis) {
        const auto lifted = lift_eigenvector(d, q, f, lambda);
        EXPECT_TRUE(is_eigenvector(IntMatrix(d), lifted, lambda));
        EXPECT_EQ(project_eigenvector(d, pi, lifted, lambda), f);
      }
    }
  }
}

TEST(LiftTest, RejectsNonEigenvectors) {
  const auto d = all_pairs_distances(build_lcr(4));
  const auto q = quotient_matrix(d, lcr_stabilizer_partition(4));
  EXPECT_THROW(lift_eigenvector(d, q, RationalVector::constant(7, 1), 18), VerificationError);
  EXPECT_THROW(lift_eigenvector(d, q, RationalVector::constant(3, 1), 19), DomainError);
}

TEST(ProjectTest, RejectsNonConstantCell) {
  const auto d = all_pairs_distances(build_lcr(4));
  const auto pi = lcr_stabilizer_partition(4);
  const auto basis = kernel_basis(IntMatrix(d).shifted(-5));
  // Some basis vector of the -5 eigenspace is not constant on the stabilizer cells.
  bool rejected = false;
  for (const auto& f : basis) {
    try {
      project_eigenvector(d, pi, f, -5);
    } catch (const VerificationError& e) {
      EXPECT_NE(std::string(e.what()).find("not constant on cell"), std::string::npos);
      rejected = true;
    }
  }
  EXPECT_TRUE(rejected);
}

TEST(PermuteTest, Examples) {
  const auto f = RationalVector::from_integers({5, 6, 7});
  EXPECT_EQ(permute_eigenvector(f, Permutation::identity(3)), f);
  const auto c = RationalVector::constant(3, Rational(2, 3));
  EXPECT_EQ(permute_eigenvector(c, Permutation::from_cycles(3, "(1 2 3)")), c);
  EXPECT_EQ(permute_eigenvector(f, Permutation::from_cycles(3, "(1 2 3)")), RationalVector::from_integers({6, 7, 5}));
  EXPECT_THROW(permute_eigenvector(f, Permutation::identity(4)), DomainError);

  const auto d = all_pairs_distances(build_lcr(4));
  for (const auto& [lambda, g] : std::vector<std::pair<long, Permutation>>{
           {-5, swap_action(4)}, {-1, swap_action(4)}, {1, pair_action(Permutation::from_cycles(4, "(1 3 2)"))}}) {
    for (const auto& v : kernel_basis(IntMatrix(d).shifted(lambda))) {
      const auto image = permute_eigenvector(d, v, g, lambda);
      EXPECT_TRUE(is_eigenvector(IntMatrix(d), image, lambda));
    }
  }
  std::vector<int> images(12);
  std::iota(images.begin(), images.end(), 0);
  std::swap(images[0], images[1]);
  bool caught = false;
  for (const auto& v : kernel_basis(IntMatrix(d).shifted(-5))) {
    try {
      permute_eigenvector(d, v, Permutation(images), -5);
    } catch (const VerificationError&) {
      caught = true;
    }
  }
  EXPECT_TRUE(caught);
}

TEST(SymmetrizeTest, CellConstantInputIsFixed) {
  const auto d = all_pairs_distances(build_lcr(5));
  const auto pi = lcr_stabilizer_partition(5);
  const auto gens = lcr_stabilizer_generators(5);
  const auto ones = RationalVector::constant(20, 1);
  EXPECT_EQ(symmetrize_eigenvector(d, ones, pi, gens, 33), ones);
  const auto q = quotient_matrix(d, pi);
  for (const auto& f : kernel_basis(q.matrix.shifted(-6))) {
    const auto lifted = lift_eigenvector(d, q, f, -6);
    EXPECT_EQ(symmetrize_eigenvector(d, lifted, pi, gens, -6), lifted);
  }
}

TEST(SymmetrizeTest, PerronVectorStaysPositive) {
  const auto d = all_pairs_distances(build_lcr(4));
  const auto pi = lcr_stabilizer_partition(4);
  const auto ones = RationalVector::constant(12, 1);
  const auto out = symmetrize_eigenvector(d, ones, pi, lcr_stabilizer_generators(4), 19);
  for (std::size_t v = 0; v < out.size(); ++v) EXPECT_GT(out[v], 0);
}

TEST(SymmetrizeTest, EqualsLiteralGroupSumOverGroupOrder) {
  for (int n = 4; n <= 5; ++n) {
    const auto d = all_pairs_distances(build_lcr(n));
    const auto pi = lcr_stabilizer_partition(n);
    const auto gens = lcr_stabilizer_generators(n);
    const auto group = group_elements(gens);
    EXPECT_EQ(group.size(), n == 4 ? 2u : 6u);
    for (long lambda : {static_cast<long>(-1 - n), static_cast<long>(3 - n), -1L, 1L}) {
      for (const auto& f : kernel_basis(IntMatrix(d).shifted(lambda))) {
        RationalVector literal(f.size());
        for (const auto& h : group) {
          const auto fh = permute_eigenvector(f, h);
          for (std::size_t v = 0; v < f.size(); ++v) literal.set(v, literal[v] + fh[v]);
        }
        const auto out = symmetrize_eigenvector(d, f, pi, gens, lambda);
        EXPECT_EQ(out, literal.scaled(Rational(1, static_cast<long>(group.size()))));
        EXPECT_EQ(out.is_zero(), std::ranges::all_of(cell_sums(f, pi), [](const Rational& x) { return x == 0; }));
      }
    }
  }
}

TEST(SymmetrizeTest, ValidatesItsInputs) {
  const auto d = all_pairs_distances(build_lcr(4));
  const auto gens = lcr_stabilizer_generators(4);
  const auto ones = RationalVector::constant(12, 1);
  EXPECT_THROW(symmetrize_eigenvector(d, ones, OrbitPartition::single_cell(12), gens, 19), VerificationError);
  EXPECT_THROW(symmetrize_eigenvector(d, ones, lcr_stabilizer_partition(4), gens, 18), VerificationError);
  std::vector<int> images(12);
  std::iota(images.begin(), images.end(), 0);
  std::swap(images[0], images[1]);
  EXPECT_THROW(symmetrize_eigenvector(d, ones, OrbitPartition::single_cell(12), GeneratorSet(12, {Permutation(images)}), 19),
               VerificationError);
}

// Every eigenvalue of D whose eigenvectors are all killed by symmetrization
// must be missing from the quotient spectrum, and vice versa. A partition with
// no singleton cell exercises the vanishing branch.
TEST(SymmetrizeTest, CellSumsVanishOutsideQuotientSpectrum) {
  int vanished = 0;
  for (int n = 4; n <= 6; ++n) {
    const auto d = all_pairs_distances(build_lcr(n));
    const IntMatrix dm(d);
    // Setwise stabilizer of {1,2}: Sym({3..n}) plus the transposition (1 2).
    auto gens = lcr_stabilizer_generators(n).generators();
    gens.push_back(pair_action(Permutation::from_cycles(n, "(1 2)")));
    const GeneratorSet setwise(d.order(), gens);
    const auto pi = orbits(setwise);
    EXPECT_FALSE(pi.singleton_cell().has_value());
    const auto q = quotient_matrix(d, pi);
    const auto q_roots = integer_roots(char_poly(q.matrix));
    std::set<long> in_q;
    for (const auto& [r, m] : q_roots.roots) in_q.insert(r.get_si());
    for (long lambda : {static_cast<long>(-1 - n), static_cast<long>(3 - n), -1L, 1L, static_cast<long>(2 * n * n - 4 * n + 3)}) {
      const bool outside = !in_q.contains(lambda);
      for (const auto& f : kernel_basis(dm.shifted(lambda))) {
        const auto sums = cell_sums(f, pi);
        if (outside) {
          for (const auto& s : sums) EXPECT_EQ(s, 0) << "n=" << n << " lambda=" << lambda;
          EXPECT_TRUE(symmetrize_eigenvector(d, f, pi, setwise, lambda).is_zero());
          ++vanished;
        }
      }
    }
  }
  EXPECT_GT(vanished, 0);
}

}  // namespace
}  // namespace distspec
