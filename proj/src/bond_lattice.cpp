#include "chromakac/bond_lattice.hpp"

#include <algorithm>
#include <bit>

namespace chromakac {

ConnectedPartition ConnectedPartition::bottom(int vertex_count) {
  ConnectedPartition p;
  p.blocks.reserve(static_cast<std::size_t>(vertex_count));
  for (int v = 0; v < vertex_count; ++v) p.blocks.push_back(VertexSet::single(v));
  return p;
}

ConnectedPartition ConnectedPartition::checked(const Graph& g, std::vector<VertexSet> blocks) {
  VertexMask seen = 0;
  for (VertexSet b : blocks) {
    if (b.empty()) throw std::invalid_argument("partition block must be non-empty");
    if ((seen & b.bits()) != 0) throw std::invalid_argument("partition blocks must be disjoint");
    if (!g.is_connected(b))
      throw std::invalid_argument("partition block " + b.to_string() + " is not connected");
    seen |= b.bits();
  }
  if (seen != g.vertices().bits())
    throw std::invalid_argument("partition blocks must cover every vertex");
  std::sort(blocks.begin(), blocks.end(),
            [](VertexSet a, VertexSet b) { return a.min_vertex() < b.min_vertex(); });
  ConnectedPartition p;
  p.blocks = std::move(blocks);
  return p;
}

int ConnectedPartition::nonsingleton_count() const {
  int d = 0;
  for (VertexSet b : blocks)
    if (b.size() > 1) ++d;
  return d;
}

VertexSet ConnectedPartition::block_containing(int v) const {
  for (VertexSet b : blocks)
    if (b.contains(v)) return b;
  throw std::out_of_range("vertex " + std::to_string(v) + " is in no block");
}

bool ConnectedPartition::refines(const ConnectedPartition& coarser) const {
  for (VertexSet b : blocks)
    if (!b.is_subset_of(coarser.block_containing(b.min_vertex()))) return false;
  return true;
}

std::string ConnectedPartition::key() const {
  int l = 0;
  for (VertexSet b : blocks) l += b.size();
  std::string k(static_cast<std::size_t>(l), '\0');
  for (VertexSet b : blocks) {
    char m = static_cast<char>(b.min_vertex());
    for (int v : b.to_vector()) k[static_cast<std::size_t>(v)] = m;
  }
  return k;
}

std::string ConnectedPartition::to_string() const {
  std::string out;
  for (VertexSet b : blocks) out += b.to_string();
  return out;
}

void for_each_connected_subset_from_min(const Graph& g, VertexSet allowed,
                                        const std::function<void(VertexSet)>& fn) {
  if (allowed.empty()) return;
  const VertexMask allowed_bits = allowed.bits();
  const int root = allowed.min_vertex();

  // Grow from the root one candidate at a time. After branching on a
  // candidate it is banned for the remaining branches at this level, so each
  // connected subset appears exactly once.
  auto extend = [&](auto&& self, VertexMask current, VertexMask banned) -> void {
    fn(VertexSet(current));
    VertexMask reach = 0;
    for (VertexMask m = current; m != 0; m &= m - 1)
      reach |= g.neighbors(std::countr_zero(m));
    VertexMask candidates = reach & allowed_bits & ~current & ~banned;
    while (candidates != 0) {
      VertexMask pick = candidates & -candidates;
      candidates &= candidates - 1;
      self(self, current | pick, banned);
      banned |= pick;
    }
  };
  extend(extend, VertexMask{1} << root, 0);
}

BondLattice BondLattice::enumerate(const Graph& g, const Limits& limits) {
  if (g.vertex_count() > limits.max_vertices)
    throw size_limit_error("vertex count exceeds the configured cap",
                           static_cast<std::uint64_t>(g.vertex_count()),
                           static_cast<std::uint64_t>(limits.max_vertices));

  BondLattice lat(g);
  std::vector<VertexSet> stack;
  std::uint64_t count = 0;

  // Each partition is produced exactly once: the block containing the
  // smallest unassigned vertex is chosen first, and connected-subset growth
  // never repeats a block.
  auto assign = [&](auto&& self, VertexMask remaining) -> void {
    if (remaining == 0) {
      if (++count > limits.max_lattice_elements)
        throw size_limit_error("bond lattice exceeds the configured element cap", count,
                               limits.max_lattice_elements);
      ConnectedPartition p;
      p.blocks = stack;
      lat.elements_.push_back(std::move(p));
      return;
    }
    for_each_connected_subset_from_min(g, VertexSet(remaining), [&](VertexSet block) {
      stack.push_back(block);
      self(self, remaining & ~block.bits());
      stack.pop_back();
    });
  };
  assign(assign, g.vertices().bits());

  // Linear extension: coarsest first (fewest blocks), ties lexicographic on
  // the block-mask sequence.
  std::sort(lat.elements_.begin(), lat.elements_.end(),
            [](const ConnectedPartition& a, const ConnectedPartition& b) {
              if (a.blocks.size() != b.blocks.size()) return a.blocks.size() < b.blocks.size();
              return std::lexicographical_compare(
                  a.blocks.begin(), a.blocks.end(), b.blocks.begin(), b.blocks.end(),
                  [](VertexSet x, VertexSet y) { return x.bits() < y.bits(); });
            });

  lat.build_index_and_covers();
  return lat;
}

void BondLattice::build_index_and_covers() {
  index_.clear();
  index_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].key(), i);

  covers_.assign(elements_.size(), {});
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const ConnectedPartition& pi = elements_[i];
    for (std::size_t bi = 0; bi < pi.blocks.size(); ++bi) {
      VertexSet block = pi.blocks[bi];
      if (block.size() < 2) continue;
      for_each_connected_subset_from_min(graph_, block, [&](VertexSet half_a) {
        if (half_a == block) return;
        VertexSet half_b = block - half_a;
        if (!graph_.is_connected(half_b)) return;
        ConnectedPartition refined;
        refined.blocks.reserve(pi.blocks.size() + 1);
        for (std::size_t bj = 0; bj < pi.blocks.size(); ++bj) {
          if (bj == bi) continue;
          refined.blocks.push_back(pi.blocks[bj]);
        }
        refined.blocks.push_back(half_a);
        refined.blocks.push_back(half_b);
        std::sort(refined.blocks.begin(), refined.blocks.end(),
                  [](VertexSet a, VertexSet b) { return a.min_vertex() < b.min_vertex(); });
        covers_[i].push_back(Cover{index_.at(refined.key()), half_a, half_b});
      });
    }
    std::sort(covers_[i].begin(), covers_[i].end(),
              [](const Cover& a, const Cover& b) { return a.target < b.target; });
  }
}

std::size_t BondLattice::index_of(const ConnectedPartition& p) const {
  auto it = index_.find(p.key());
  if (it == index_.end())
    throw std::out_of_range("partition " + p.to_string() + " is not in the lattice");
  return it->second;
}

bool BondLattice::contains(const ConnectedPartition& p) const {
  return index_.count(p.key()) != 0;
}

std::vector<std::size_t> BondLattice::interval_indices(std::size_t sigma) const {
  if (sigma >= elements_.size()) throw std::out_of_range("lattice index out of range");
  const ConnectedPartition& top = elements_[sigma];
  std::vector<std::size_t> out;
  out.push_back(sigma);
  // Strict refinements have more blocks, hence larger indices.
  for (std::size_t j = sigma + 1; j < elements_.size(); ++j)
    if (elements_[j].refines(top)) out.push_back(j);
  return out;
}

BondLattice BondLattice::interval_below(std::size_t sigma) const {
  std::vector<std::size_t> keep = interval_indices(sigma);
  BondLattice sub(graph_);
  sub.elements_.reserve(keep.size());
  for (std::size_t j : keep) sub.elements_.push_back(elements_[j]);
  // Extension order is inherited from the ambient lattice. Every cover target
  // of a kept element refines sigma too, so the cover structure rebuilds
  // intact from the elements alone.
  sub.build_index_and_covers();
  return sub;
}

std::vector<mpz_class> BondLattice::mobius() const {
  std::vector<mpz_class> mu(elements_.size());
  // Reverse extension order is increasing rank: bottom first.
  for (std::size_t ri = elements_.size(); ri-- > 0;) {
    if (ri == bottom_index()) {
      mu[ri] = 1;
      continue;
    }
    const ConnectedPartition& top = elements_[ri];
    mpz_class below = 0;
    for (std::size_t j = ri + 1; j < elements_.size(); ++j)
      if (elements_[j].refines(top)) below += mu[j];
    mu[ri] = -below;
  }
  return mu;
}

Graph blocks_subgraph(const Graph& g, const ConnectedPartition& sigma) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (sigma.block_containing(u).contains(v)) edges.emplace_back(u, v);
  return Graph(g.vertex_count(), edges);
}

}  // namespace chromakac
