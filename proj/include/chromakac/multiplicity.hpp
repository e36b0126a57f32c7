#pragma once

#include <gmpxx.h>

#include <unordered_map>
#include <vector>

#include "chromakac/bond_lattice.hpp"
#include "chromakac/graph.hpp"

namespace chromakac {

/// Root multiplicities of the Kac-Moody algebra whose Dynkin diagram is the
/// graph, computed by the Peterson recurrence specialized to connected
/// supports. Memoized by support bitmask. Not thread-safe; share one table
/// per thread or guard externally.
class MultTable {
 public:
  explicit MultTable(const Graph& g) : graph_(g) {}

  const Graph& graph() const { return graph_; }

  /// Multiplicity of the root supported on s. Requires s non-empty and
  /// connected; singletons have multiplicity 1. For larger supports the
  /// recurrence sums over all unordered splits into two connected halves,
  /// weighting each by cross-edges over internal edges; every intermediate
  /// sum is an exact rational and the total is checked to be an integer.
  mpz_class root_multiplicity(VertexSet s);

  /// Product of root_multiplicity over the blocks; 1 for the bottom.
  mpz_class partition_multiplicity(const ConnectedPartition& pi);

 private:
  Graph graph_;
  std::unordered_map<VertexMask, mpz_class> memo_;
};

/// Weight of the cover splitting block half_a|half_b of pi:
///   (1 / d(pi)) * cross_edges(half_a, half_b) / edges(half_a | half_b)
/// where d(pi) counts the non-singleton blocks. Always in (0, 1], and equal
/// to 1 exactly when the refined partition is the bottom.
mpq_class edge_weight(const Graph& g, const ConnectedPartition& pi, VertexSet half_a,
                      VertexSet half_b);

/// Sum of weights over all directed cover paths from each element down to
/// the bottom, one value per element in extension order. Computed as a
/// dynamic program over the lattice; by distributivity it equals the literal
/// path sum. The bottom gets the empty path, weight 1. Independent of
/// MultTable by construction.
std::vector<mpq_class> path_sums(const BondLattice& lat);

mpq_class path_sum(const BondLattice& lat, std::size_t index);

/// Literal enumeration of every path to the bottom, multiplying the edge
/// weights along each. Exponential; meant for validating the dynamic
/// program on small graphs.
mpq_class path_sum_enumerated(const BondLattice& lat, std::size_t index);

}  // namespace chromakac
