#include "distspec/spectrum.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "distspec/distance.hpp"
#include "distspec/families.hpp"
#include "distspec/error.hpp"
#include "distspec/linalg.hpp"
#include "distspec/parallel.hpp"
#include "distspec/quotient.hpp"

namespace distspec {

std::string to_string(SpectrumMethod method) {
  switch (method) {
    case SpectrumMethod::RankSweep: return "rank-sweep";
    case SpectrumMethod::CharPoly: return "char-poly";
    case SpectrumMethod::QuotientAssisted: return "quotient-assisted";
  }
  return "unknown";
}

std::optional<SpectrumMethod> parse_spectrum_method(const std::string& text) {
  for (auto m : {SpectrumMethod::RankSweep, SpectrumMethod::CharPoly, SpectrumMethod::QuotientAssisted}) {
    if (text == to_string(m)) return m;
  }
  return std::nullopt;
}

std::vector<std::int64_t> Spectrum::distinct() const {
  std::vector<std::int64_t> out;
  for (const auto& [value, multiplicity] : eigenvalues) out.push_back(value);
  return out;
}

int Spectrum::multiplicity(std::int64_t lambda) const {
  for (const auto& [value, multiplicity] : eigenvalues) {
    if (value == lambda) return multiplicity;
  }
  return 0;
}

int Spectrum::dimension() const {
  int total = residual ? residual->degree() : 0;
  for (const auto& [value, multiplicity] : eigenvalues) total += multiplicity;
  return total;
}

BigInt Spectrum::trace() const {
  BigInt sum = 0;
  for (const auto& [value, multiplicity] : eigenvalues) sum += BigInt(static_cast<long>(value)) * multiplicity;
  if (residual) sum -= residual->coefficient(residual->degree() - 1);
  return sum;
}

bool IntegralityReport::all_checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw VerificationError("eigenvalue " + v.get_str() + " does not fit in 64 bits");
  return v.get_si();
}

// Multiplicity of each candidate by rank, then the non-integral remainder of
// the characteristic polynomial if the integer part does not fill the space.
Spectrum spectrum_from_candidates(const IntMatrix& d, std::vector<std::int64_t> candidates) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<int> multiplicity(candidates.size(), 0);
  parallel_for(candidates.size(), [&](std::size_t k) {
    multiplicity[k] = eigen_multiplicity(d, BigInt(static_cast<long>(candidates[k])));
  });

  Spectrum s;
  s.order = d.rows();
  int found = 0;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (multiplicity[k] > 0) {
      s.eigenvalues.emplace_back(candidates[k], multiplicity[k]);
      found += multiplicity[k];
    }
  }
  if (found < s.order) {
    std::vector<std::pair<BigInt, int>> roots;
    for (const auto& [value, mult] : s.eigenvalues) roots.emplace_back(BigInt(static_cast<long>(value)), mult);
    auto residual = char_poly(d).divide_exact(IntPolynomial::from_roots(roots));
    if (!integer_roots(residual).roots.empty()) {
      throw VerificationError("non-integral factor of the characteristic polynomial still has an integer root");
    }
    s.residual = std::move(residual);
  } else if (found > s.order) {
    throw VerificationError("eigenvalue multiplicities exceed the matrix order");
  }
  return s;
}

Spectrum spectrum_by_char_poly(const IntMatrix& d) {
  auto extraction = integer_roots(char_poly(d));
  Spectrum s;
  s.order = d.rows();
  for (const auto& [root, mult] : extraction.roots) s.eigenvalues.emplace_back(to_int64(root), mult);
  if (extraction.residual.degree() >= 1) s.residual = std::move(extraction.residual);
  return s;
}

std::vector<std::int64_t> quotient_candidates(const DistanceMatrix& d, const OrbitPartition& partition) {
  const auto q = quotient_matrix(d, partition);
  std::vector<std::int64_t> out;
  for (const auto& [root, mult] : integer_roots(char_poly(q.matrix)).roots) out.push_back(to_int64(root));
  return out;
}

OrbitPartition checked_stabilizer_partition(const Graph& g, const SymmetryData& symmetry) {
  if (!is_vertex_transitive_under(g, symmetry.transitive)) {
    throw DomainError("quotient-assisted spectrum needs a vertex-transitive group; the given generators have " +
                      std::to_string(orbits(symmetry.transitive).cell_count()) + " orbits on " + g.name());
  }
  for (std::size_t t = 0; t < symmetry.stabilizer.size(); ++t) {
    if (!is_automorphism(g, symmetry.stabilizer.generators()[t])) {
      throw DomainError("stabilizer generator " + std::to_string(t) + " is not an automorphism of " + g.name());
    }
  }
  auto partition = orbits(symmetry.stabilizer);
  if (!partition.singleton_cell()) {
    throw DomainError("quotient-assisted spectrum needs an orbit partition with a singleton cell");
  }
  return partition;
}

}  // namespace

Spectrum distance_spectrum(const Graph& g, SpectrumMethod method, const SymmetryData* symmetry) {
  if (method == SpectrumMethod::QuotientAssisted && symmetry == nullptr) {
    throw DomainError("quotient-assisted spectrum needs symmetry generators");
  }
  const auto d = all_pairs_distances(g);
  const IntMatrix m(d);
  switch (method) {
    case SpectrumMethod::RankSweep: {
      const std::int64_t rho = d.max_row_sum();
      std::vector<std::int64_t> candidates;
      for (std::int64_t lambda = -rho; lambda <= rho; ++lambda) candidates.push_back(lambda);
      return spectrum_from_candidates(m, std::move(candidates));
    }
    case SpectrumMethod::CharPoly:
      return spectrum_by_char_poly(m);
    case SpectrumMethod::QuotientAssisted: {
      const auto partition = checked_stabilizer_partition(g, *symmetry);
      return spectrum_from_candidates(m, quotient_candidates(d, partition));
    }
  }
  throw DomainError("unknown spectrum method");
}

namespace {

std::string join(const std::vector<std::int64_t>& values) {
  std::ostringstream out;
  for (std::size_t k = 0; k < values.size(); ++k) out << (k ? " " : "") << values[k];
  return out.str();
}

std::string join(const std::vector<std::pair<std::int64_t, int>>& values) {
  std::ostringstream out;
  for (std::size_t k = 0; k < values.size(); ++k) out << (k ? " " : "") << values[k].first << "^" << values[k].second;
  return out.str();
}

void add_consistency_checks(IntegralityReport& r) {
  const int dim = r.spectrum.dimension();
  r.checks.push_back({"dimension", dim == r.order,
                      "multiplicities + residual degree = " + std::to_string(dim) + ", order = " + std::to_string(r.order)});
  const BigInt trace = r.spectrum.trace();
  r.checks.push_back({"trace", trace == 0, "eigenvalue sum = " + trace.get_str() + " (distance matrices have trace 0)"});
}

IntegralityReport make_report(const std::string& name, SpectrumMethod method, Spectrum spectrum) {
  IntegralityReport r;
  r.graph = name;
  r.order = spectrum.order;
  r.method = method;
  r.is_distance_integral = spectrum.integral();
  r.distinct_values = spectrum.distinct();
  r.spectrum = std::move(spectrum);
  return r;
}

}  // namespace

IntegralityReport is_distance_integral(const Graph& g, SpectrumMethod method, const SymmetryData* symmetry) {
  auto r = make_report(g.name(), method, distance_spectrum(g, method, symmetry));
  add_consistency_checks(r);
  return r;
}

std::vector<std::pair<std::int64_t, int>> lcr_quotient_expected_roots(int n) {
  const std::int64_t a = n;
  std::vector<std::pair<std::int64_t, int>> roots{{-1, 1}, {1, 1}, {-1 - a, 2}, {3 - a, 2}, {2 * a * a - 4 * a + 3, 1}};
  std::sort(roots.begin(), roots.end());
  // 3 - n coincides with -1 at n = 4.
  std::vector<std::pair<std::int64_t, int>> merged;
  for (const auto& [value, mult] : roots) {
    if (!merged.empty() && merged.back().first == value) merged.back().second += mult;
    else merged.emplace_back(value, mult);
  }
  return merged;
}

std::vector<std::int64_t> lcr_expected_distinct(int n) {
  std::vector<std::int64_t> out;
  for (const auto& [value, mult] : lcr_quotient_expected_roots(n)) out.push_back(value);
  return out;
}

IntegralityReport verify_lcr_theorem(int n) {
  if (n < 4) throw DomainError("verification of the L(Cr(n)) spectrum requires n >= 4");
  IntegralityReport r;
  r.graph = "L(Cr(" + std::to_string(n) + "))";
  r.order = pair_count(n);
  r.method = SpectrumMethod::QuotientAssisted;
  r.spectrum.order = r.order;

  const std::int64_t rho = 2LL * n * n - 4LL * n + 3;
  std::string stage = "graph";
  try {
    const auto g = build_lcr(n);
    const auto degree = g.regular_degree();
    r.checks.push_back({stage, g.order() == n * (n - 1) && degree == 2 * n - 4,
                        "order " + std::to_string(g.order()) + ", degree " + (degree ? std::to_string(*degree) : "irregular")});

    stage = "distances";
    const auto d = all_pairs_distances(g);
    bool closed_form_ok = true;
    bool row_sums_ok = true;
    for (int u = 0; u < d.order(); ++u) {
      row_sums_ok = row_sums_ok && d.row_sum(u) == rho;
      for (int v = 0; v < d.order(); ++v) {
        closed_form_ok = closed_form_ok && d(u, v) == closed_form_lcr_distance(n, pair_at(n, u), pair_at(n, v));
      }
    }
    r.checks.push_back({stage, d.diameter() == 3 && closed_form_ok && row_sums_ok,
                        "diameter " + std::to_string(d.diameter()) + ", closed form " + (closed_form_ok ? "agrees" : "disagrees") +
                            ", row sums " + (row_sums_ok ? "all " + std::to_string(rho) : "not constant")});

    stage = "automorphisms";
    const auto symmetry = lcr_symmetry(n);
    const bool transitive = is_vertex_transitive_under(g, symmetry.transitive);
    bool stabilizer_ok = true;
    for (const auto& h : symmetry.stabilizer.generators()) stabilizer_ok = stabilizer_ok && is_automorphism(g, h);
    r.checks.push_back({stage, transitive && stabilizer_ok,
                        std::string("pair action of Sym([n]) with the swap is ") + (transitive ? "" : "not ") +
                            "transitive; stabilizer generators " + (stabilizer_ok ? "are" : "are not") + " automorphisms"});

    stage = "orbits";
    const auto partition = lcr_stabilizer_partition(n);
    std::vector<int> sizes;
    for (const auto& cell : partition.cells()) sizes.push_back(static_cast<int>(cell.size()));
    const std::vector<int> expected_sizes{1, n - 2, n - 2, 1, n - 2, n - 2, (n - 2) * (n - 3)};
    std::ostringstream sizes_text;
    for (std::size_t k = 0; k < sizes.size(); ++k) sizes_text << (k ? " " : "") << sizes[k];
    r.checks.push_back({stage, sizes == expected_sizes && partition.singleton_cell().has_value(),
                        "cell sizes " + sizes_text.str()});

    stage = "quotient-formula";
    const auto q = quotient_matrix(d, partition);
    const auto closed = lcr_quotient_closed_form(n);
    int mismatches = 0;
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) mismatches += q.matrix(i, j) != closed(i, j);
    }
    r.checks.push_back({stage, mismatches == 0, std::to_string(49 - mismatches) + "/49 entries match the closed form"});

    stage = "quotient-spectrum";
    const auto q_roots = integer_roots(char_poly(q.matrix));
    std::vector<std::pair<std::int64_t, int>> q_spectrum;
    for (const auto& [root, mult] : q_roots.roots) q_spectrum.emplace_back(to_int64(root), mult);
    const bool q_ok = q_spectrum == lcr_quotient_expected_roots(n) && q_roots.residual == IntPolynomial::constant(1);
    r.checks.push_back({stage, q_ok, "roots of det(xI - Q): " + join(q_spectrum) + ", residual " + q_roots.residual.to_string()});

    stage = "distance-spectrum";
    std::vector<std::int64_t> candidates;
    for (const auto& [value, mult] : q_spectrum) candidates.push_back(value);
    r.spectrum = spectrum_from_candidates(IntMatrix(d), candidates);
    r.is_distance_integral = r.spectrum.integral();
    r.distinct_values = r.spectrum.distinct();
    r.checks.push_back({stage, r.is_distance_integral && r.distinct_values == lcr_expected_distinct(n),
                        "distinct eigenvalues " + join(r.distinct_values) + ", expected " + join(lcr_expected_distinct(n))});

    stage = "multiplicities";
    const bool every_q_root_in_d = std::all_of(q_spectrum.begin(), q_spectrum.end(),
                                               [&](const auto& e) { return r.spectrum.multiplicity(e.first) > 0; });
    const bool ok = r.spectrum.dimension() == r.order && r.spectrum.trace() == 0 && r.spectrum.multiplicity(rho) == 1 &&
                    every_q_root_in_d;
    r.checks.push_back({stage, ok,
                        "spectrum " + join(r.spectrum.eigenvalues) + "; sum " + std::to_string(r.spectrum.dimension()) +
                            ", trace " + r.spectrum.trace().get_str()});
  } catch (const std::exception& e) {
    r.checks.push_back({stage, false, e.what()});
  }
  return r;
}

}  // namespace distspec
