#pragma once

#include <vector>

#include "distspec/graph.hpp"

namespace distspec {

// Vertex orders are canonical and documented per builder; matrices built from
// these graphs are reproducible across runs.

/// Crown graph Cr(n), n >= 3: K_{n,n} minus a perfect matching.
/// Vertices 0..n-1 are the points 1..n, vertices n..2n-1 are x_1..x_n;
/// i ~ x_j iff i != j.
Graph build_crown(int n);

/// Line graph of g. Vertex k is the k-th edge of g in g.edges() order,
/// labelled "{label(u),label(v)}".
Graph build_line_graph(const Graph& g);

/// Direct pair model of L(Cr(n)): vertices (i, j), i != j, in lexicographic
/// order; (i, j) ~ (r, s) iff i == r or j == s.
Graph build_lcr(int n);

/// Johnson graph J(n, k): k-subsets of [n] in colex order, adjacent iff they
/// share k-1 points.
Graph build_johnson(int n, int k);

/// The k-subsets of [n] (1-based, each sorted) in colex order; the vertex order of build_johnson.
std::vector<std::vector<int>> johnson_subsets(int n, int k);

/// The n-cycle, n >= 3.
Graph build_cycle(int n);

/// Complete graph K_n, n >= 1.
Graph build_complete(int n);

/// Circulant graph on Z_n: i ~ i +/- s for every jump s.
Graph build_circulant(int n, const std::vector<int>& jumps);

/// Path on n >= 1 vertices.
Graph build_path(int n);

}  // namespace distspec
