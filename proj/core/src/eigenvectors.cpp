#include "distspec/eigenvectors.hpp"

#include <string>

#include "distspec/error.hpp"
#include "distspec/linalg.hpp"

namespace distspec {

namespace {

RationalVector apply(const DistanceMatrix& d, const RationalVector& f) {
  std::vector<Rational> out(static_cast<std::size_t>(d.order()), Rational(0));
  for (int u = 0; u < d.order(); ++u) {
    Rational& acc = out[static_cast<std::size_t>(u)];
    for (int w = 0; w < d.order(); ++w) acc += d(u, w) * f[static_cast<std::size_t>(w)];
  }
  return RationalVector(std::move(out));
}

bool is_eigenvector(const DistanceMatrix& d, const RationalVector& f, const BigInt& lambda) {
  if (f.size() != static_cast<std::size_t>(d.order()) || f.is_zero()) return false;
  return apply(d, f) == f.scaled(Rational(lambda));
}

void require_size(const RationalVector& f, int size, const char* what) {
  if (f.size() != static_cast<std::size_t>(size)) {
    throw DomainError(std::string(what) + ": vector has " + std::to_string(f.size()) + " entries, expected " +
                      std::to_string(size));
  }
}

}  // namespace

bool is_eigenvector(const IntMatrix& m, const RationalVector& f, const BigInt& lambda) {
  if (!m.is_square() || f.size() != static_cast<std::size_t>(m.cols()) || f.is_zero()) return false;
  return mat_vec(m, f) == f.scaled(Rational(lambda));
}

RationalVector lift_eigenvector(const DistanceMatrix& d, const QuotientMatrix& q, const RationalVector& f,
                                const BigInt& lambda) {
  require_size(f, q.matrix.rows(), "lift_eigenvector");
  if (q.partition.degree() != d.order()) throw DomainError("lift_eigenvector: partition does not match D");
  if (!is_eigenvector(q.matrix, f, lambda)) {
    throw VerificationError("lift_eigenvector: input is not an eigenvector of Q for " + lambda.get_str());
  }
  RationalVector lifted(static_cast<std::size_t>(d.order()));
  for (int v = 0; v < d.order(); ++v) lifted.set(static_cast<std::size_t>(v), f[static_cast<std::size_t>(q.partition.cell_of(v))]);
  if (!is_eigenvector(d, lifted, lambda)) {
    throw VerificationError("lift_eigenvector: lifted vector is not an eigenvector of D for " + lambda.get_str());
  }
  return lifted;
}

RationalVector project_eigenvector(const DistanceMatrix& d, const OrbitPartition& partition, const RationalVector& f,
                                   const BigInt& lambda) {
  require_size(f, d.order(), "project_eigenvector");
  if (!is_eigenvector(d, f, lambda)) {
    throw VerificationError("project_eigenvector: input is not an eigenvector of D for " + lambda.get_str());
  }
  RationalVector projected(static_cast<std::size_t>(partition.cell_count()));
  for (int c = 0; c < partition.cell_count(); ++c) {
    const auto& cell = partition.cell(c);
    const Rational& value = f[static_cast<std::size_t>(cell.front())];
    for (int v : cell) {
      if (f[static_cast<std::size_t>(v)] != value) {
        throw VerificationError("project_eigenvector: vector is not constant on cell " + std::to_string(c));
      }
    }
    projected.set(static_cast<std::size_t>(c), value);
  }
  const auto q = quotient_matrix(d, partition);
  if (!is_eigenvector(q.matrix, projected, lambda)) {
    throw VerificationError("project_eigenvector: projection is not an eigenvector of Q for " + lambda.get_str());
  }
  return projected;
}

RationalVector permute_eigenvector(const RationalVector& f, const Permutation& g) {
  require_size(f, g.degree(), "permute_eigenvector");
  RationalVector out(f.size());
  for (int v = 0; v < g.degree(); ++v) out.set(static_cast<std::size_t>(v), f[static_cast<std::size_t>(g(v))]);
  return out;
}

RationalVector permute_eigenvector(const DistanceMatrix& d, const RationalVector& f, const Permutation& g,
                                   const BigInt& lambda) {
  auto out = permute_eigenvector(f, g);
  if (is_eigenvector(d, f, lambda) && !is_eigenvector(d, out, lambda)) {
    throw VerificationError("permute_eigenvector: image is not an eigenvector; the permutation is not an automorphism");
  }
  return out;
}

std::vector<Rational> cell_sums(const RationalVector& f, const OrbitPartition& partition) {
  require_size(f, partition.degree(), "cell_sums");
  std::vector<Rational> sums(static_cast<std::size_t>(partition.cell_count()), Rational(0));
  for (int v = 0; v < partition.degree(); ++v) {
    sums[static_cast<std::size_t>(partition.cell_of(v))] += f[static_cast<std::size_t>(v)];
  }
  return sums;
}

RationalVector symmetrize_eigenvector(const DistanceMatrix& d, const RationalVector& f,
                                      const OrbitPartition& partition, const GeneratorSet& gens,
                                      const BigInt& lambda) {
  require_size(f, d.order(), "symmetrize_eigenvector");
  if (gens.degree() != d.order() || partition.degree() != d.order()) {
    throw DomainError("symmetrize_eigenvector: generator or partition degree does not match D");
  }
  for (std::size_t t = 0; t < gens.size(); ++t) {
    const auto& g = gens.generators()[t];
    for (int u = 0; u < d.order(); ++u) {
      for (int v = u + 1; v < d.order(); ++v) {
        if (d(u, v) != d(g(u), g(v))) {
          throw VerificationError("symmetrize_eigenvector: generator " + std::to_string(t) + " does not preserve distances");
        }
      }
    }
  }
  // Closed under gens with as many cells as there are orbits: every cell is one orbit.
  if (!partition.is_closed_under(gens) || orbits(gens).cell_count() != partition.cell_count()) {
    throw VerificationError("symmetrize_eigenvector: partition is not the orbit partition of the generators");
  }
  if (!is_eigenvector(d, f, lambda)) {
    throw VerificationError("symmetrize_eigenvector: input is not an eigenvector of D for " + lambda.get_str());
  }

  const auto sums = cell_sums(f, partition);
  RationalVector out(f.size());
  for (int v = 0; v < d.order(); ++v) {
    const int c = partition.cell_of(v);
    const Rational size(static_cast<long>(partition.cell(c).size()));
    out.set(static_cast<std::size_t>(v), sums[static_cast<std::size_t>(c)] / size);
  }
  if (!out.is_zero() && !is_eigenvector(d, out, lambda)) {
    throw VerificationError("symmetrize_eigenvector: symmetrized vector is not an eigenvector of D for " + lambda.get_str());
  }
  return out;
}

}  // namespace distspec
