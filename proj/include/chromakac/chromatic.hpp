#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <utility>
#include <vector>

#include "chromakac/bond_lattice.hpp"
#include "chromakac/graph.hpp"
#include "chromakac/multiplicity.hpp"
#include "chromakac/polynomial.hpp"

namespace chromakac {

/// Square matrix over the bond lattice in extension order: -w(pi, pi') on
/// cover edges, q at the bottom diagonal cell, zero elsewhere. Upper
/// triangular because covers point forward in extension order. Entries are
/// degree <= 1 polynomials with rational coefficients; rows are sparse,
/// sorted by column.
struct WeightMatrix {
  std::size_t order = 0;
  std::vector<std::vector<std::pair<std::size_t, RationalPolynomial>>> rows;

  /// Zero polynomial for absent cells.
  RationalPolynomial entry(std::size_t row, std::size_t col) const;
};

WeightMatrix build_weight_matrix(const BondLattice& lat);

// ---------------------------------------------------------------------------
// Chromatic polynomial routes. All of them return the same polynomial; that
// equality is the point, and `verify` checks it on every run.
// ---------------------------------------------------------------------------

/// Alternating sum of partition multiplicities over the bond lattice.
Polynomial chromatic_bond_lattice(const BondLattice& lat, MultTable& table);
Polynomial chromatic_bond_lattice(const Graph& g, const Limits& limits = {});

/// Same sum restricted to the interval below sigma; equals the chromatic
/// polynomial of the graph keeping only edges inside sigma's blocks (on all
/// vertices, so the degree stays the full vertex count).
Polynomial chromatic_interval(const BondLattice& lat, MultTable& table, std::size_t sigma);
Polynomial chromatic_interval(const Graph& g, const ConnectedPartition& sigma,
                              const Limits& limits = {});

/// Moebius-function route; independent of multiplicities.
Polynomial chromatic_mobius(const BondLattice& lat);
Polynomial chromatic_mobius(const Graph& g, const Limits& limits = {});

/// Weighted-path route: alternating sum of path sums. Intermediates are
/// rational; the result must be integral (integrality_error otherwise).
Polynomial chromatic_path_sum(const BondLattice& lat);
Polynomial chromatic_path_sum(const Graph& g, const Limits& limits = {});

/// Matrix formulation: sum of all entries of W^l.
Polynomial chromatic_matrix_power(const BondLattice& lat);
Polynomial chromatic_matrix_power(const Graph& g, const Limits& limits = {});

/// Classical deletion-contraction recursion, memoized on the canonical
/// edge-list encoding; the pivot is always the lexicographically smallest
/// edge.
Polynomial chromatic_deletion_contraction(const Graph& g);

/// Exhaustive count of proper colorings with colors {0..q-1}. Ground-truth
/// oracle; guarded by limits.max_coloring_colors / max_coloring_vertices.
mpz_class coloring_count(const Graph& g, int colors, const Limits& limits = {});

/// Lagrange interpolation through the exact points (0..l, coloring_count).
Polynomial chromatic_interpolated(const Graph& g, const Limits& limits = {});

/// Counts of ordered partitions of the vertex set into k independent sets,
/// indexed by k (index 0 unused). c_k = k! times the unordered count.
std::vector<mpz_class> ordered_independent_partition_counts(const Graph& g,
                                                            const Limits& limits = {});

/// Classical expansion: sum over k of c_k * binomial(q, k).
Polynomial chromatic_independent_partitions(const Graph& g, const Limits& limits = {});

/// Generating function of partition multiplicities by block count — the
/// q-Kostant partition function at the sum of all simple roots. All
/// coefficients non-negative; equals (-1)^l P(-q).
Polynomial q_kostant_at_beta(const BondLattice& lat, MultTable& table);
Polynomial q_kostant_at_beta(const Graph& g, const Limits& limits = {});

/// (-1)^l p(-q): flips signs so every coefficient of a chromatic polynomial
/// becomes non-negative.
Polynomial sign_flipped(const Polynomial& p, int vertex_count);

/// Brute-force count of edge orientations with no directed cycle; guarded by
/// limits.max_orientation_edges. Independent of every polynomial route.
mpz_class acyclic_orientation_count(const Graph& g, const Limits& limits = {});

/// Multiplicity of the root supported on all vertices; requires a connected
/// graph. Numerically this also counts conjugacy classes of Coxeter elements
/// of the associated Weyl group, which is what `verify` cross-checks against
/// the linear coefficient of the sign-flipped polynomial.
mpz_class coxeter_class_count(const Graph& g);

}  // namespace chromakac
