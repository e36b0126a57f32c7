#include "chromakac/multiplicity.hpp"

#include "chromakac/errors.hpp"

namespace chromakac {

mpz_class MultTable::root_multiplicity(VertexSet s) {
  if (s.empty() || !graph_.is_connected(s))
    throw std::invalid_argument("root support must be non-empty and connected");
  if (s.is_singleton()) return 1;

  auto hit = memo_.find(s.bits());
  if (hit != memo_.end()) return hit->second;

  const int internal_edges = graph_.edge_count(s);  // >= 1 since s is connected, |s| >= 2
  mpq_class total = 0;

  // Unordered splits s = a | b with both halves connected: force the minimum
  // vertex into a, walk proper submasks.
  const VertexMask s_bits = s.bits();
  const VertexMask min_bit = s_bits & -s_bits;
  const VertexMask rest = s_bits & ~min_bit;
  for (VertexMask sub = rest;; sub = (sub - 1) & rest) {
    VertexSet a(min_bit | sub);
    VertexSet b(s_bits & ~a.bits());
    if (!b.empty() && graph_.is_connected(a) && graph_.is_connected(b)) {
      mpq_class term(graph_.cross_edge_count(a, b), internal_edges);
      term *= root_multiplicity(a) * root_multiplicity(b);
      total += term;
    }
    if (sub == 0) break;
  }

  total.canonicalize();
  if (total.get_den() != 1)
    throw integrality_error("root multiplicity of " + s.to_string() +
                            " did not reduce to an integer: " + total.get_str());
  mpz_class result = total.get_num();
  memo_.emplace(s.bits(), result);
  return result;
}

mpz_class MultTable::partition_multiplicity(const ConnectedPartition& pi) {
  mpz_class product = 1;
  for (VertexSet block : pi.blocks) product *= root_multiplicity(block);
  return product;
}

mpq_class edge_weight(const Graph& g, const ConnectedPartition& pi, VertexSet half_a,
                      VertexSet half_b) {
  if (half_a.empty() || half_b.empty() || half_a.intersects(half_b))
    throw std::invalid_argument("split halves must be non-empty and disjoint");
  VertexSet block = half_a | half_b;
  bool found = false;
  for (VertexSet b : pi.blocks) found = found || b == block;
  if (!found)
    throw std::invalid_argument("split " + block.to_string() + " is not a block of " +
                                pi.to_string());
  if (block.size() < 2) throw std::invalid_argument("cannot split a singleton block");
  if (!g.is_connected(half_a) || !g.is_connected(half_b))
    throw std::invalid_argument("split halves must be connected");

  const int d = pi.nonsingleton_count();
  mpq_class w(g.cross_edge_count(half_a, half_b),
              static_cast<long>(d) * g.edge_count(block));
  w.canonicalize();
  return w;
}

std::vector<mpq_class> path_sums(const BondLattice& lat) {
  std::vector<mpq_class> f(lat.size());
  // Cover targets always have larger indices, so a single reverse sweep
  // resolves every dependency. The bottom is the last element.
  for (std::size_t i = lat.size(); i-- > 0;) {
    if (i == lat.bottom_index()) {
      f[i] = 1;
      continue;
    }
    mpq_class acc = 0;
    for (const Cover& c : lat.covers_of(i))
      acc += edge_weight(lat.graph(), lat.element(i), c.half_a, c.half_b) * f[c.target];
    acc.canonicalize();
    f[i] = acc;
  }
  return f;
}

mpq_class path_sum(const BondLattice& lat, std::size_t index) {
  if (index >= lat.size()) throw std::out_of_range("lattice index out of range");
  return path_sums(lat)[index];
}

mpq_class path_sum_enumerated(const BondLattice& lat, std::size_t index) {
  if (index >= lat.size()) throw std::out_of_range("lattice index out of range");
  mpq_class total = 0;
  auto walk = [&](auto&& self, std::size_t at, const mpq_class& product) -> void {
    if (at == lat.bottom_index()) {
      total += product;
      return;
    }
    for (const Cover& c : lat.covers_of(at))
      self(self, c.target,
           mpq_class(product * edge_weight(lat.graph(), lat.element(at), c.half_a, c.half_b)));
  };
  walk(walk, index, mpq_class(1));
  total.canonicalize();
  return total;
}

}  // namespace chromakac
