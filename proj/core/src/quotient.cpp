#include "distspec/quotient.hpp"

#include <string>

#include "distspec/error.hpp"

namespace distspec {

QuotientMatrix quotient_matrix(const DistanceMatrix& d, const OrbitPartition& partition) {
  if (partition.degree() != d.order()) {
    throw DomainError("partition covers " + std::to_string(partition.degree()) + " vertices but the distance matrix has order " +
                      std::to_string(d.order()));
  }
  const int m = partition.cell_count();
  const auto row_for = [&](int v) {
    std::vector<long> row(static_cast<std::size_t>(m), 0);
    for (int w = 0; w < d.order(); ++w) row[static_cast<std::size_t>(partition.cell_of(w))] += d(v, w);
    return row;
  };

  QuotientMatrix q{IntMatrix(m, m), partition, {}};
  for (int i = 0; i < m; ++i) {
    const auto& cell = partition.cell(i);
    const int rep = cell.front();
    q.representatives.push_back(rep);
    const auto reference = row_for(rep);
    for (std::size_t t = 1; t < cell.size(); ++t) {
      const auto row = row_for(cell[t]);
      for (int j = 0; j < m; ++j) {
        if (row[static_cast<std::size_t>(j)] != reference[static_cast<std::size_t>(j)]) {
          throw VerificationError("partition is not equitable: in cell " + std::to_string(i) + ", vertices " +
                                  std::to_string(rep) + " and " + std::to_string(cell[t]) +
                                  " have different distance sums to cell " + std::to_string(j) + " (" +
                                  std::to_string(reference[static_cast<std::size_t>(j)]) + " vs " +
                                  std::to_string(row[static_cast<std::size_t>(j)]) + ")");
        }
      }
    }
    for (int j = 0; j < m; ++j) q.matrix(i, j) = reference[static_cast<std::size_t>(j)];
  }
  return q;
}

IntMatrix lcr_quotient_closed_form(int n) {
  if (n < 4) throw DomainError("closed-form quotient of L(Cr(n)) requires n >= 4");
  const long a = n;
  const long p = (a - 2) * (a - 3);
  const long s = (a - 3) * (2 * a - 5);
  return IntMatrix::from_rows({
      {0, a - 2, 2 * a - 4, 3, 2 * a - 4, a - 2, 2 * p},
      {1, a - 3, 2 * a - 3, 2, 2 * a - 5, 2 * a - 4, s},
      {2, 2 * a - 3, a - 3, 1, 2 * a - 4, 2 * a - 5, s},
      {3, 2 * a - 4, a - 2, 0, a - 2, 2 * a - 4, 2 * p},
      {2, 2 * a - 5, 2 * a - 4, 1, a - 3, 2 * a - 3, s},
      {1, 2 * a - 4, 2 * a - 5, 2, 2 * a - 3, a - 3, s},
      {2, 2 * a - 5, 2 * a - 5, 2, 2 * a - 5, 2 * a - 5, 2 * (a - 4) * (a - 2) + 3},
  });
}

}  // namespace distspec
