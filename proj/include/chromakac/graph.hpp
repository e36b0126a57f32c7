#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chromakac/errors.hpp"

namespace chromakac {

using VertexMask = std::uint64_t;

/// Subset of the vertex range [0, l), stored as a bitmask. Vertex i is a
/// member iff bit i is set. Immutable value type.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(VertexMask bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(VertexMask{1} << v); }

  /// {0, 1, ..., n-1}
  static constexpr VertexSet first_n(int n) {
    return n >= 64 ? VertexSet(~VertexMask{0}) : VertexSet((VertexMask{1} << n) - 1);
  }

  static VertexSet of(std::initializer_list<int> vertices) {
    VertexMask bits = 0;
    for (int v : vertices) bits |= VertexMask{1} << v;
    return VertexSet(bits);
  }

  constexpr VertexMask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
  constexpr bool is_singleton() const { return size() == 1; }

  /// Lowest-numbered member; set must be non-empty.
  constexpr int min_vertex() const { return std::countr_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(bits_ | (VertexMask{1} << v)); }
  constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(VertexMask{1} << v)); }

  constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }

  friend constexpr bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(VertexSet a, VertexSet b) { return a.bits_ != b.bits_; }
  friend constexpr bool operator<(VertexSet a, VertexSet b) { return a.bits_ < b.bits_; }

  std::vector<int> to_vector() const;

  /// "{0,2,3}" — for messages and map keys.
  std::string to_string() const;

 private:
  VertexMask bits_ = 0;
};

enum class GraphFamily { path, cycle, complete, star, random };

/// Parses "path", "cycle", "complete", "star" or "random"; throws
/// std::invalid_argument otherwise.
GraphFamily parse_family(std::string_view name);

/// Simple undirected graph on labeled vertices 0..l-1. Immutable after
/// construction; all queries are pure.
class Graph {
 public:
  /// Validates the edge list: indices in range, no self-loops. Duplicate
  /// edges collapse to one.
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  /// Edge-list text: first non-comment line is l, each following non-empty
  /// line "u v". '#' starts a comment, CRLF tolerated.
  static Graph parse(std::string_view text, const Limits& limits = {});

  /// Canonical labeled families. `random` draws each unordered pair
  /// independently with probability p from a splitmix64 stream seeded with
  /// `seed` (pairs consumed in lexicographic order), so the same seed always
  /// yields the same graph.
  static Graph generate(GraphFamily family, int n, std::optional<std::uint64_t> seed = {},
                        std::optional<double> p = {}, const Limits& limits = {});

  int vertex_count() const { return vertex_count_; }
  VertexSet vertices() const { return VertexSet::first_n(vertex_count_); }

  /// Sorted list of edges as (u, v) with u < v.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  VertexMask neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return (neighbors(u) >> v) & 1; }

  /// Number of edges with both ends in s.
  int edge_count(VertexSet s) const;

  /// Number of edges with one end in s and the other in t; s and t must be
  /// disjoint.
  int cross_edge_count(VertexSet s, VertexSet t) const;

  /// Whether the subgraph induced by s is connected; s must be non-empty.
  /// Singletons are connected.
  bool is_connected(VertexSet s) const;

  bool is_connected() const { return is_connected(vertices()); }

  /// Pairing of the root supported on s against itself minus twice the Weyl
  /// vector; equals -2 * edge_count(s). Requires s non-empty and connected.
  int form_beta_beta_minus_2rho(VertexSet s) const;

  /// Standalone copy of the subgraph induced by s, vertices relabeled to
  /// 0..|s|-1 in ascending order of their original labels.
  Graph induced(VertexSet s) const;

  /// Edge-list text that parses back to an equal graph.
  std::string to_edge_list() const;

  bool operator==(const Graph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

 private:
  void check_in_range(VertexSet s) const;

  int vertex_count_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<VertexMask> adjacency_;
};

}  // namespace chromakac
