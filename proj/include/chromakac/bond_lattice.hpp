#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chromakac/graph.hpp"

namespace chromakac {

/// Partition of the full vertex set into blocks, each inducing a connected
/// subgraph. Blocks are kept sorted by minimum element, which makes equality
/// structural.
struct ConnectedPartition {
  std::vector<VertexSet> blocks;

  static ConnectedPartition bottom(int vertex_count);

  /// Builds from arbitrary block order; validates disjointness and coverage
  /// against `g` (including per-block connectivity).
  static ConnectedPartition checked(const Graph& g, std::vector<VertexSet> blocks);

  int block_count() const { return static_cast<int>(blocks.size()); }

  /// Number of non-singleton blocks; zero exactly for the bottom partition.
  int nonsingleton_count() const;

  bool is_bottom() const { return nonsingleton_count() == 0; }

  VertexSet block_containing(int v) const;

  /// True if every block of *this lies inside a block of `coarser`.
  bool refines(const ConnectedPartition& coarser) const;

  /// One byte per vertex: the minimum element of its block. Canonical key.
  std::string key() const;

  std::string to_string() const;

  bool operator==(const ConnectedPartition& other) const { return blocks == other.blocks; }
};

/// Directed cover edge pi -> pi': one block of pi split into the two
/// connected halves (half_a holds the block's minimum vertex).
struct Cover {
  std::size_t target;
  VertexSet half_a;
  VertexSet half_b;
};

/// The lattice of connected partitions of a graph, ordered by refinement
/// (coarser partitions are larger). Elements are stored in a fixed linear
/// extension: ascending block count, ties broken lexicographically on the
/// block-mask sequence. Covers therefore always point forward, so the weight
/// matrix built over this order is upper triangular. Immutable once built.
class BondLattice {
 public:
  /// Enumerates every connected partition exactly once. Throws
  /// size_limit_error when the element count passes limits.max_lattice_elements.
  static BondLattice enumerate(const Graph& g, const Limits& limits = {});

  const Graph& graph() const { return graph_; }
  std::size_t size() const { return elements_.size(); }
  const ConnectedPartition& element(std::size_t i) const { return elements_[i]; }
  const std::vector<ConnectedPartition>& elements() const { return elements_; }

  /// Ordinal of a partition in the linear extension; throws std::out_of_range
  /// for partitions not in the lattice.
  std::size_t index_of(const ConnectedPartition& p) const;

  bool contains(const ConnectedPartition& p) const;

  /// All ways of splitting one non-singleton block of element i into two
  /// connected halves, sorted by target index. Empty exactly for the bottom.
  const std::vector<Cover>& covers_of(std::size_t i) const { return covers_[i]; }

  /// The all-singletons partition; always the last element in extension order.
  std::size_t bottom_index() const { return elements_.size() - 1; }

  int rank(std::size_t i) const {
    return graph_.vertex_count() - elements_[i].block_count();
  }

  /// Indices (ascending) of every element below-or-equal element `sigma`,
  /// i.e. every partition refining it.
  std::vector<std::size_t> interval_indices(std::size_t sigma) const;

  /// Sub-lattice on the interval below `sigma`; isomorphic to the bond
  /// lattice of the graph keeping only edges inside sigma's blocks.
  BondLattice interval_below(std::size_t sigma) const;

  /// Moebius values mu(bottom, pi) for every element, computed from the
  /// defining relations alone: mu at the bottom is 1 and every interval
  /// above the bottom sums to zero. Processed by increasing rank.
  std::vector<mpz_class> mobius() const;

 private:
  BondLattice(Graph g) : graph_(std::move(g)) {}
  void build_index_and_covers();

  Graph graph_;
  std::vector<ConnectedPartition> elements_;
  std::vector<std::vector<Cover>> covers_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// The graph on all vertices of g keeping only edges inside blocks of sigma.
Graph blocks_subgraph(const Graph& g, const ConnectedPartition& sigma);

/// Enumerates every connected subset of `allowed` containing its minimum
/// vertex, invoking fn once per subset. Exposed for reuse and testing.
void for_each_connected_subset_from_min(const Graph& g, VertexSet allowed,
                                        const std::function<void(VertexSet)>& fn);

}  // namespace chromakac
